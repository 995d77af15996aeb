"""Instance generators: CNF-to-framework reductions and random frameworks.

The reductions turn satisfiability questions into acceptance questions and
come with a designated one-argument backdoor, which makes them the
adversarial corner of the test corpus: frameworks at distance 1 from the
bipartite or symmetric class whose acceptance encodes SAT.

Argument naming: ``x<i>`` / ``nx<i>`` for the positive / negative literal
of variable i, ``c<j>`` for clause j (1-based), ``phi`` for the query
argument of the credulous variants and ``phiP`` for the extra argument of
the skeptical variants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .framework import ArgumentationFramework

__all__ = [
    "CnfFormula",
    "parse_dimacs",
    "reduce_ca_bip",
    "reduce_sa_bip",
    "reduce_ca_sym",
    "reduce_sa_sym",
    "generate_random",
]


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula as signed 1-based literals."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("variable count must be nonnegative")
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            for literal in clause:
                if literal == 0 or abs(literal) > self.num_vars:
                    raise ValueError(f"literal {literal} out of range")

    @property
    def is_three_cnf(self) -> bool:
        return all(len(clause) == 3 for clause in self.clauses)

    @property
    def is_monotone(self) -> bool:
        """Each clause all-positive or all-negative."""
        return all(min(clause) > 0 or max(clause) < 0
                   for clause in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Standard DIMACS CNF: ``p cnf <vars> <clauses>`` then 0-terminated
    clauses; ``c`` lines are comments."""
    num_vars: int | None = None
    expected_clauses = 0
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if (num_vars is not None or len(parts) != 4 or parts[1] != "cnf"):
                raise ValueError(f"malformed header: {raw!r}")
            try:
                num_vars = int(parts[2])
                expected_clauses = int(parts[3])
            except ValueError:
                raise ValueError(f"malformed header: {raw!r}") from None
            continue
        if num_vars is None:
            raise ValueError("clause data before the 'p cnf' header")
        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise ValueError(f"bad literal token {token!r}") from None
            if literal == 0:
                if not current:
                    raise ValueError("empty clause")
                clauses.append(tuple(current))
                current.clear()
            else:
                if abs(literal) > num_vars:
                    raise ValueError(f"literal {literal} out of range")
                current.append(literal)
    if num_vars is None:
        raise ValueError("missing 'p cnf' header")
    if current:
        raise ValueError("last clause lacks the terminating 0")
    if len(clauses) != expected_clauses:
        raise ValueError(f"header announces {expected_clauses} clauses, "
                         f"found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def _literal_argument(literal: int) -> str:
    return f"x{literal}" if literal > 0 else f"nx{-literal}"


def _variable_gadgets(formula: CnfFormula) -> tuple[list[str],
                                                    list[tuple[str, str]]]:
    arguments: list[str] = []
    attacks: list[tuple[str, str]] = []
    for i in range(1, formula.num_vars + 1):
        pos, neg = f"x{i}", f"nx{i}"
        arguments += [pos, neg]
        attacks += [(pos, neg), (neg, pos)]
    return arguments, attacks


def reduce_ca_bip(formula: CnfFormula) -> tuple[ArgumentationFramework, str]:
    """Credulous-acceptance instance at distance <= 1 from bipartite.

    Requires a monotone 3-CNF. Each clause argument is attacked by its
    literals' arguments and attacks ``phi``; variable arguments attack
    each other mutually. ``{phi}`` is the designated backdoor.
    """
    if not formula.is_three_cnf:
        raise ValueError("every clause must have exactly three literals")
    if not formula.is_monotone:
        raise ValueError("every clause must be all-positive or all-negative")
    arguments, attacks = _variable_gadgets(formula)
    for j, clause in enumerate(formula.clauses, start=1):
        name = f"c{j}"
        arguments.append(name)
        attacks.extend((_literal_argument(lit), name) for lit in clause)
        attacks.append((name, "phi"))
    arguments.append("phi")
    return ArgumentationFramework(arguments, attacks), "phi"


def reduce_sa_bip(formula: CnfFormula) -> tuple[ArgumentationFramework, str]:
    """Skeptical variant: the credulous instance plus a mutual-attack
    partner ``phiP`` of ``phi``, which becomes the query argument."""
    af, phi = reduce_ca_bip(formula)
    arguments = list(af.arguments) + ["phiP"]
    attacks = list(af.attacks) + [(phi, "phiP"), ("phiP", phi)]
    return ArgumentationFramework(arguments, attacks), "phiP"


def reduce_ca_sym(formula: CnfFormula) -> tuple[ArgumentationFramework, str]:
    """Credulous-acceptance instance at distance <= 1 from symmetric.

    Any 3-CNF. Clause arguments and their literals' arguments attack each
    other mutually; the lone asymmetry is each clause attacking ``phi``.
    """
    if not formula.is_three_cnf:
        raise ValueError("every clause must have exactly three literals")
    arguments, attacks = _variable_gadgets(formula)
    for j, clause in enumerate(formula.clauses, start=1):
        name = f"c{j}"
        arguments.append(name)
        for lit in clause:
            literal = _literal_argument(lit)
            attacks += [(literal, name), (name, literal)]
        attacks.append((name, "phi"))
    arguments.append("phi")
    return ArgumentationFramework(arguments, attacks), "phi"


def reduce_sa_sym(formula: CnfFormula) -> tuple[ArgumentationFramework, str]:
    """Skeptical variant of the symmetric reduction, querying ``phiP``."""
    af, phi = reduce_ca_sym(formula)
    arguments = list(af.arguments) + ["phiP"]
    attacks = list(af.attacks) + [(phi, "phiP"), ("phiP", phi)]
    return ArgumentationFramework(arguments, attacks), "phiP"


def generate_random(n: int, p: float, seed: int) -> ArgumentationFramework:
    """Seeded random framework: arguments ``a1..an``, each ordered pair of
    distinct arguments attacked independently with probability ``p``.

    Uses Python's Mersenne Twister (`random.Random`), whose ``random()``
    sequence for a given seed is guaranteed stable across platforms and
    versions, so a seed pins the framework bit-for-bit. Pairs are drawn in
    row-major order of the argument indices.
    """
    if n < 0:
        raise ValueError("argument count must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("attack probability must lie in [0, 1]")
    rng = random.Random(seed)
    names = [f"a{i}" for i in range(1, n + 1)]
    attacks = [(a, b)
               for a in names for b in names
               if a != b and rng.random() < p]
    return ArgumentationFramework(names, attacks)
