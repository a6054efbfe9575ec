"""Species, complexes, reactions and networks.

Complexes are nonnegative integer vectors over an ordered species list and
double as monomial exponents.  Networks are immutable; every helper here
returns a new object.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Complex",
    "Reaction",
    "Network",
    "ParseError",
    "parse_network",
    "serialize",
    "is_genuine",
    "molecularity",
    "support",
    "multiset_shared",
    "reduced_reactants",
    "translate_network",
    "canonical_key",
    "canonical_form",
    "permute_species",
]


@dataclass(frozen=True, order=True)
class Complex:
    """Formal nonnegative integer combination of species."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"complex exponents must be nonnegative, got {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def zero(cls, n_species: int) -> Complex:
        return cls((0,) * n_species)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, i: int) -> int:
        return self.exponents[i]

    def __add__(self, other: Complex) -> Complex:
        _check_dim(self, other)
        return Complex(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __sub__(self, other: Complex) -> Complex:
        """Multiset difference; raises if a coefficient would go negative."""
        _check_dim(self, other)
        return Complex(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    @property
    def molecularity(self) -> int:
        return sum(self.exponents)

    @property
    def is_zero(self) -> bool:
        return not any(self.exponents)

    def format(self, species_names: Sequence[str]) -> str:
        terms = []
        for name, e in zip(species_names, self.exponents):
            if e == 1:
                terms.append(name)
            elif e > 1:
                terms.append(f"{e}{name}")
        return " + ".join(terms) if terms else "0"


def _check_dim(a: Complex, b: Complex) -> None:
    if len(a) != len(b):
        raise ValueError(f"species dimension mismatch: {len(a)} vs {len(b)}")


@dataclass(frozen=True)
class Reaction:
    reactant: Complex
    product: Complex
    rate_index: int

    def __post_init__(self) -> None:
        _check_dim(self.reactant, self.product)
        if self.reactant == self.product:
            raise ValueError("reactant complex equals product complex")
        if self.rate_index < 1:
            raise ValueError("rate_index must be >= 1")


@dataclass(frozen=True)
class Network:
    """A mass-action network: ordered species names and ordered reactions.

    Reaction ``j`` (0-based) carries rate constant ``kappa_{j+1}``.
    """

    species_names: tuple[str, ...]
    reactions: tuple[Reaction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "species_names", tuple(self.species_names))
        object.__setattr__(self, "reactions", tuple(self.reactions))
        s = len(self.species_names)
        if len(set(self.species_names)) != s:
            raise ValueError("duplicate species names")
        seen = set()
        for j, rxn in enumerate(self.reactions, start=1):
            if len(rxn.reactant) != s:
                raise ValueError(
                    f"reaction {j} has dimension {len(rxn.reactant)}, expected {s}"
                )
            if rxn.rate_index != j:
                raise ValueError(f"reaction {j} has rate index {rxn.rate_index}")
            pair = (rxn.reactant, rxn.product)
            if pair in seen:
                raise ValueError(f"duplicate reaction {j}")
            seen.add(pair)

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[tuple[Sequence[int], Sequence[int]]],
        species_names: Sequence[str] | None = None,
    ) -> Network:
        """Build a network from ``(reactant, product)`` exponent vectors."""
        rxns = tuple(
            Reaction(Complex(tuple(r)), Complex(tuple(p)), j)
            for j, (r, p) in enumerate(pairs, start=1)
        )
        if species_names is None:
            n = len(rxns[0].reactant) if rxns else 0
            species_names = [f"S{i + 1}" for i in range(n)]
        return cls(tuple(species_names), rxns)

    @property
    def n_species(self) -> int:
        return len(self.species_names)

    @property
    def n_reactions(self) -> int:
        return len(self.reactions)

    @property
    def reactants(self) -> tuple[Complex, ...]:
        return tuple(r.reactant for r in self.reactions)

    @property
    def products(self) -> tuple[Complex, ...]:
        return tuple(r.product for r in self.reactions)

    def complexes(self) -> list[Complex]:
        out: list[Complex] = []
        for rxn in self.reactions:
            for c in (rxn.reactant, rxn.product):
                if c not in out:
                    out.append(c)
        return out

    def pairs(self) -> list[tuple[Complex, Complex]]:
        return [(r.reactant, r.product) for r in self.reactions]

    def __str__(self) -> str:
        return serialize(self)


# --------------------------------------------------------------------------
# complex combinatorics


def molecularity(c: Complex) -> int:
    return c.molecularity


def support(c: Complex) -> frozenset[int]:
    """Indices of species with a positive coefficient in ``c``."""
    return frozenset(i for i, e in enumerate(c.exponents) if e > 0)


def multiset_shared(a: Complex, b: Complex) -> Complex:
    """Componentwise minimum, i.e. the intersection of multiset supports."""
    _check_dim(a, b)
    return Complex(tuple(min(x, y) for x, y in zip(a.exponents, b.exponents)))


def reduced_reactants(net: Network) -> tuple[Complex, list[Complex]]:
    """Split the reactant complexes into their shared part and the remainders."""
    if not net.reactions:
        raise ValueError("network has no reactions")
    shared = net.reactants[0]
    for c in net.reactants[1:]:
        shared = multiset_shared(shared, c)
    return shared, [c - shared for c in net.reactants]


def translate_network(net: Network, m: Complex | Sequence[int]) -> Network:
    """Add ``m`` to every reactant and product complex."""
    if not isinstance(m, Complex):
        m = Complex(tuple(m))
    if len(m) != net.n_species:
        raise ValueError("translation vector has the wrong species dimension")
    rxns = tuple(
        Reaction(r.reactant + m, r.product + m, r.rate_index) for r in net.reactions
    )
    return Network(net.species_names, rxns)


def is_genuine(net: Network) -> bool:
    """True iff every species occurs with positive coefficient in some complex."""
    present = [False] * net.n_species
    for c in (c for rxn in net.reactions for c in (rxn.reactant, rxn.product)):
        for i, e in enumerate(c.exponents):
            if e > 0:
                present[i] = True
    return all(present)


# --------------------------------------------------------------------------
# text format

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<rev><->)|(?P<arrow>->)|(?P<plus>\+)"
    r"|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<comment>#.*)"
)


class ParseError(ValueError):
    """Malformed network text.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


def _tokenize(text: str, lineno: int) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind == "comment":
            break
        if kind != "ws":
            toks.append((kind, m.group(), pos + 1))
        pos = m.end()
    return toks


def _parse_complex(toks, i, lineno, end_col, registry):
    """Parse one complex starting at ``toks[i]``; returns (coeffs, next index)."""

    def expect_term(i):
        if i >= len(toks):
            raise ParseError("expected a species term", lineno, end_col)
        kind, val, col = toks[i]
        coeff = 1
        if kind == "int":
            coeff = int(val)
            if coeff == 0:
                raise ParseError("coefficient 0 is not allowed in a term", lineno, col)
            i += 1
            if i >= len(toks) or toks[i][0] != "ident":
                where = toks[i][2] if i < len(toks) else end_col
                raise ParseError("expected a species name after coefficient", lineno, where)
            kind, val, col = toks[i]
        elif kind != "ident":
            raise ParseError(f"expected a species term, found {val!r}", lineno, col)
        if val not in registry:
            registry[val] = len(registry)
        return (val, coeff), i + 1

    if i < len(toks) and toks[i][0] == "int" and toks[i][1] == "0":
        nxt = toks[i + 1][0] if i + 1 < len(toks) else None
        if nxt != "ident":
            return {}, i + 1
    coeffs: dict[str, int] = {}
    (name, c), i = expect_term(i)
    coeffs[name] = coeffs.get(name, 0) + c
    while i < len(toks) and toks[i][0] == "plus":
        (name, c), i = expect_term(i + 1)
        coeffs[name] = coeffs.get(name, 0) + c
    return coeffs, i


def parse_network(text: str) -> Network:
    """Parse the line-oriented reaction DSL.

    One reaction per line, ``lhs -> rhs`` or ``lhs <-> rhs``.  A reversible
    line expands to the forward reaction followed by the reverse one.
    Species are ordered by first appearance.  ``#`` starts a comment.

    >>> str(parse_network("A -> 2B\\n2B -> A"))
    'A -> 2B\\n2B -> A'
    """
    registry: dict[str, int] = {}
    raw: list[tuple[dict[str, int], dict[str, int], int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokenize(line, lineno)
        if not toks:
            continue
        end_col = len(line.rstrip()) + 1
        lhs, i = _parse_complex(toks, 0, lineno, end_col, registry)
        if i >= len(toks) or toks[i][0] not in ("arrow", "rev"):
            where = toks[i][2] if i < len(toks) else end_col
            raise ParseError("expected '->' or '<->'", lineno, where)
        reversible = toks[i][0] == "rev"
        rhs, i = _parse_complex(toks, i + 1, lineno, end_col, registry)
        if i < len(toks):
            raise ParseError(f"unexpected token {toks[i][1]!r}", lineno, toks[i][2])
        if lhs == rhs:
            raise ParseError("reactant complex equals product complex", lineno, 1)
        raw.append((lhs, rhs, lineno, 1))
        if reversible:
            raw.append((rhs, lhs, lineno, 1))
    if not raw:
        raise ParseError("no reactions found")

    names = tuple(registry)

    def vec(coeffs: dict[str, int]) -> Complex:
        v = [0] * len(names)
        for name, c in coeffs.items():
            v[registry[name]] = c
        return Complex(tuple(v))

    rxns = []
    seen: dict[tuple[Complex, Complex], int] = {}
    for j, (lhs, rhs, lineno, col) in enumerate(raw, start=1):
        pair = (vec(lhs), vec(rhs))
        if pair in seen:
            raise ParseError(
                f"duplicate reaction (first given on line {seen[pair]})", lineno, col
            )
        seen[pair] = lineno
        rxns.append(Reaction(pair[0], pair[1], j))
    return Network(names, tuple(rxns))


def serialize(net: Network) -> str:
    """Render ``net`` in the DSL, one reaction per line, terms in species order."""
    return "\n".join(
        f"{r.reactant.format(net.species_names)} -> {r.product.format(net.species_names)}"
        for r in net.reactions
    )


# --------------------------------------------------------------------------
# isomorphism


def permute_species(net: Network, perm: Sequence[int]) -> Network:
    """Relabel species: new species ``k`` is old species ``perm[k]``."""
    names = tuple(net.species_names[p] for p in perm)
    return Network.from_pairs(
        (
            (tuple(r.reactant[p] for p in perm), tuple(r.product[p] for p in perm))
            for r in net.reactions
        ),
        names,
    )


def _key_for(pairs: list[tuple[tuple[int, ...], tuple[int, ...]]], names) -> str:
    lines = []
    for r, p in sorted(pairs):
        lines.append(f"{Complex(r).format(names)} -> {Complex(p).format(names)}")
    return "\n".join(lines)


def canonical_key(net: Network) -> str:
    """Lexicographically least serialization over species relabelings.

    Species are renamed ``S1..Ss`` in permuted order and reactions are sorted
    by ``(reactant, product)`` exponents, so reaction order never matters.
    Two networks are isomorphic iff their keys are equal.
    """
    s = net.n_species
    names = [f"S{i + 1}" for i in range(s)]
    best = None
    for perm in itertools.permutations(range(s)):
        pairs = [
            (tuple(r.reactant[p] for p in perm), tuple(r.product[p] for p in perm))
            for r in net.reactions
        ]
        key = _key_for(pairs, names)
        if best is None or key < best:
            best = key
    return best if best is not None else ""


def canonical_form(net: Network) -> Network:
    """Representative of the isomorphism class of ``net``.

    Built by parsing :func:`canonical_key`, so ``serialize`` and
    ``parse_network`` round-trip exactly on the result.
    """
    all_names = [f"S{i + 1}" for i in range(net.n_species)]
    if not net.reactions:
        return Network(tuple(all_names), ())
    parsed = parse_network(canonical_key(net))
    if parsed.n_species == net.n_species:
        return parsed
    # species absent from every complex (non-genuine) go last
    extra = [n for n in all_names if n not in parsed.species_names]
    pad = (0,) * len(extra)
    return Network.from_pairs(
        ((r.exponents + pad, p.exponents + pad) for r, p in parsed.pairs()),
        parsed.species_names + tuple(extra),
    )
