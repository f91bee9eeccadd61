"""Number theory over Z_q and Z_2q.

Primitive roots, multiplicative orders, the order-two class partition of
Z_2q \\ {0} into D0, D1, E0, E1 and the singleton {q}, and the multiplier
cosets C_(t,2q) = {t * r^i mod 2q}.

All residues are normalized to [0, 2q). Everything is exact integer
arithmetic, deterministic, and immutable after construction. Primality
testing is trial division, which is adequate for the desk-scale moduli
(< 10^6) this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvariantViolation

#: Labels of the six cells partitioning Z_2q.
CLASS_LABELS = ("D0", "D1", "E0", "E1", "Q", "ZERO")


def is_odd_prime(n: int) -> bool:
    """Deterministic trial-division primality check (intended for n < 10^6)."""
    if n < 3 or n % 2 == 0:
        return False
    for p in range(3, math.isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def element_order(a: int, m: int) -> int:
    """Least e >= 1 with a^e = 1 (mod m). Requires gcd(a, m) = 1 and m >= 2."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    t, e = a, 1
    while t != 1:
        t = t * a % m
        e += 1
    return e


def find_common_primitive_root(q: int) -> int:
    """Smallest g >= 2 that generates the units modulo both q and 2q.

    The scan is smallest-first so class labelings are reproducible.
    """
    if not is_odd_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    target = q - 1
    for g in range(2, 2 * q):
        if math.gcd(g, 2 * q) != 1:
            continue
        if element_order(g, q) == target and element_order(g, 2 * q) == target:
            return g
    raise InvariantViolation(f"no common primitive root below 2q for q={q}")


@dataclass(frozen=True)
class CyclotomicSystem:
    """The order-two class partition of Z_2q.

    d0 holds the even powers of g modulo 2q and d1 the odd powers, both in
    generation order; e0 and e1 are their doubled images. Together with
    {0} and {q} these six cells partition Z_2q.
    """

    q: int
    g: int
    d0: tuple[int, ...]
    d1: tuple[int, ...]
    e0: tuple[int, ...]
    e1: tuple[int, ...]
    _labels: dict = field(compare=False, repr=False)

    @property
    def modulus(self) -> int:
        return 2 * self.q

    def members(self, label: str) -> tuple[int, ...]:
        """Residues of one cell, in generation order for D/E classes."""
        if label == "D0":
            return self.d0
        if label == "D1":
            return self.d1
        if label == "E0":
            return self.e0
        if label == "E1":
            return self.e1
        if label == "Q":
            return (self.q,)
        if label == "ZERO":
            return (0,)
        raise ValueError(f"unknown class label {label!r}")


def cyclotomic_classes(q: int) -> CyclotomicSystem:
    """Build the order-two classes of Z_2q from the smallest common primitive root."""
    g = find_common_primitive_root(q)
    m = 2 * q
    half = (q - 1) // 2
    g2 = g * g % m
    d0 = [1]
    for _ in range(half - 1):
        d0.append(d0[-1] * g2 % m)
    d1 = [u * g % m for u in d0]
    e0 = [2 * u % m for u in d0]
    e1 = [2 * u % m for u in d1]

    labels: dict[int, str] = {0: "ZERO", q: "Q"}
    for name, cell in (("D0", d0), ("D1", d1), ("E0", e0), ("E1", e1)):
        for v in cell:
            if v in labels:
                raise InvariantViolation(f"residue {v} assigned twice for q={q}")
        labels.update((v, name) for v in cell)
    system = CyclotomicSystem(q, g, tuple(d0), tuple(d1), tuple(e0), tuple(e1), labels)
    _check_system(system)
    return system


def _check_system(system: CyclotomicSystem) -> None:
    # Partition, sizes, parity, and the sign of -1 are cheap to verify on
    # every build; a failure means the primitive-root scan is broken.
    q, m = system.q, system.modulus
    half = (q - 1) // 2
    cells = (system.d0, system.d1, system.e0, system.e1)
    if any(len(c) != half for c in cells):
        raise InvariantViolation(f"class sizes differ from (q-1)/2 for q={q}")
    if len(system._labels) != m:
        raise InvariantViolation(f"classes do not partition Z_{m}")
    if any(v % 2 == 0 for v in system.d0 + system.d1):
        raise InvariantViolation("even residue in an odd class")
    if any(v % 2 for v in system.e0 + system.e1):
        raise InvariantViolation("odd residue in an even class")
    minus_one = m - 1
    expected = "D0" if q % 4 == 1 else "D1"
    if system._labels[minus_one] != expected:
        raise InvariantViolation(f"-1 lies in {system._labels[minus_one]}, expected {expected}")


def classify(system: CyclotomicSystem, v: int) -> str:
    """Label of the unique cell containing residue v."""
    if not 0 <= v < system.modulus:
        raise ValueError(f"residue {v} out of range [0, {system.modulus})")
    return system._labels[v]


def multiply_class(system: CyclotomicSystem, v: int, label: str) -> str:
    """Label of the elementwise product v * cell for a multiplier v in D0 or D1.

    The image set is recomputed and compared against the predicted cell, so
    a wrong answer can never be returned silently.
    """
    m = system.modulus
    v_label = classify(system, v % m)
    if v_label not in ("D0", "D1"):
        raise ValueError(f"multiplier {v} lies in {v_label}; only D0/D1 multipliers are closed")
    if label not in CLASS_LABELS:
        raise ValueError(f"unknown class label {label!r}")

    image = {v * u % m for u in system.members(label)}
    if label in ("Q", "ZERO"):
        predicted = label
    else:
        i = int(v_label[1])
        j = int(label[1])
        predicted = label[0] + str((i + j) % 2)
    if image != set(system.members(predicted)):
        raise InvariantViolation(
            f"product of {v} and {label} is not the single class {predicted} (q={system.q})"
        )
    return predicted


@dataclass
class CosetTable:
    """Partition of Z_2q into orbits under multiplication by r.

    cosets maps the minimal element of each orbit to the orbit in
    generation order (t, t*r, t*r^2, ...); keys ascend. ell is the
    multiplicative order of r modulo 2q, the common size of every orbit
    other than {0} and {q}.
    """

    q: int
    r: int
    ell: int
    cosets: dict[int, tuple[int, ...]]

    @property
    def modulus(self) -> int:
        return 2 * self.q

    def coset_of(self, v: int) -> tuple[int, ...]:
        for orbit in self.cosets.values():
            if v in orbit:
                return orbit
        raise ValueError(f"residue {v} out of range [0, {self.modulus})")


def cyclotomy_cosets(q: int, r: int) -> CosetTable:
    """All multiplier cosets C_(t,2q) keyed by minimal representative."""
    if not is_odd_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    m = 2 * q
    if math.gcd(r, m) != 1:
        raise ValueError(f"gcd({r}, {m}) != 1; multiplier must be a unit")
    rr = r % m
    ell = element_order(rr, m)

    cosets: dict[int, tuple[int, ...]] = {}
    seen = [False] * m
    for t in range(m):
        if seen[t]:
            continue
        orbit = [t]
        seen[t] = True
        u = t * rr % m
        while u != t:
            orbit.append(u)
            seen[u] = True
            u = u * rr % m
        cosets[t] = tuple(orbit)

    for t, orbit in cosets.items():
        want = 1 if t in (0, q) else ell
        if len(orbit) != want:
            raise InvariantViolation(f"coset of {t} mod {m} has size {len(orbit)}, expected {want}")
    return CosetTable(q, r, ell, cosets)


@dataclass(frozen=True)
class PairValidation:
    """Diagnostic report for a (q, r) construction pair."""

    q: int
    r: int
    q_is_odd_prime: bool
    q_is_3_mod_4: bool
    r_is_odd_prime: bool
    coprime: bool
    r_in_d0: bool

    @property
    def ok(self) -> bool:
        return all(
            (self.q_is_odd_prime, self.q_is_3_mod_4, self.r_is_odd_prime, self.coprime, self.r_in_d0)
        )

    @property
    def factorization_ok(self) -> bool:
        """Checks needed to factor x^2q - 1; q = 3 (mod 4) is not one of them."""
        return all((self.q_is_odd_prime, self.r_is_odd_prime, self.coprime, self.r_in_d0))

    def failures(self) -> tuple[str, ...]:
        names = ("q_is_odd_prime", "q_is_3_mod_4", "r_is_odd_prime", "coprime", "r_in_d0")
        return tuple(n for n in names if not getattr(self, n))


def validate_pair(q: int, r: int) -> PairValidation:
    """Check every precondition of the construction; never raises."""
    q_prime = is_odd_prime(q)
    q_mod4 = q_prime and q % 4 == 3
    r_prime = is_odd_prime(r)
    coprime = q >= 1 and math.gcd(r, 2 * q) == 1
    in_d0 = False
    if q_prime and coprime:
        system = cyclotomic_classes(q)
        in_d0 = classify(system, r % (2 * q)) == "D0"
    return PairValidation(q, r, q_prime, q_mod4, r_prime, coprime, in_d0)
