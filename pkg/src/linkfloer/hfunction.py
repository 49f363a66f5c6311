"""Alexander polynomials of knots and h-functions of L-space knots.

The knot Floer complex of an L-space knot is a staircase, so its h-function
is determined by the Alexander polynomial alone: h(k) is the k-th torsion
coefficient of the symmetric normalized polynomial.  Everything is integer
arithmetic on coefficient dictionaries {exponent: coefficient}.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Symmetric normalized integer Laurent polynomial of a knot.

    The constructor is strict: coefficients must already satisfy
    a_k = a_{-k} and sum to 1.  Use ``alexander_from_text`` for friendly
    input that recenters one-sided polynomials.
    """

    coefficients: dict

    def __post_init__(self):
        clean = {}
        for exponent, coefficient in self.coefficients.items():
            if not isinstance(exponent, int) or not isinstance(coefficient, int):
                raise ValueError(
                    "exponents and coefficients must be integers: %r -> %r"
                    % (exponent, coefficient)
                )
            if coefficient:
                clean[exponent] = coefficient
        if not clean:
            raise ValueError("the zero polynomial is not an Alexander polynomial")
        for exponent, coefficient in clean.items():
            if clean.get(-exponent) != coefficient:
                raise ValueError(
                    "coefficients are not symmetric: a_%d = %d but a_%d = %d"
                    % (exponent, coefficient, -exponent, clean.get(-exponent, 0))
                )
        value_at_one = sum(clean.values())
        if value_at_one != 1:
            raise ValueError("polynomial is not normalized: value at 1 is %d" % value_at_one)
        object.__setattr__(self, "coefficients", clean)

    @property
    def degree(self) -> int:
        """Top exponent with nonzero coefficient (the genus for L-space knots)."""
        return max(self.coefficients)


def alexander_from_text(text: str) -> AlexanderPolynomial:
    """Parse "lo:c_lo,...,c_hi" (or "c_0,..." with lo = 0) into a polynomial.

    Coefficients run from the lowest to the highest exponent, e.g.
    "-1:1,-1,1" is t^-1 - 1 + t.  One-sided input such as "1,-1,1" is
    recentered by shifting exponents; a sign making the value at 1 equal
    to -1 is flipped.  Anything that is still asymmetric afterwards is
    rejected.
    """
    text = text.strip()
    if ":" in text:
        prefix, _, body = text.partition(":")
        lowest = int(prefix)
    else:
        lowest = 0
        body = text
    coefficients = {}
    for offset, token in enumerate(body.split(",")):
        value = int(token)
        if value:
            coefficients[lowest + offset] = value
    if not coefficients:
        raise ValueError("the zero polynomial is not an Alexander polynomial")
    low, high = min(coefficients), max(coefficients)
    if (low + high) % 2 != 0:
        raise ValueError("cannot symmetrize: exponent span %d..%d is odd" % (low, high))
    shift = (low + high) // 2
    if shift:
        coefficients = {e - shift: c for e, c in coefficients.items()}
    if sum(coefficients.values()) == -1:
        coefficients = {e: -c for e, c in coefficients.items()}
    return AlexanderPolynomial(coefficients)


def torsion_coefficient(polynomial: AlexanderPolynomial, k: int) -> int:
    """Torsion coefficient t_k = sum over j >= 1 of j * a_{k+j}.

    For negative k this is computed through t_k = t_{-k} - k, which agrees
    with the direct sum whenever the polynomial is symmetric and normalized.
    """
    if k < 0:
        return torsion_coefficient(polynomial, -k) - k
    return sum((e - k) * c for e, c in polynomial.coefficients.items() if e > k)


@dataclass(frozen=True)
class HFunction:
    """The h-function of an L-space knot: a finite table plus linear tails.

    ``values`` covers -genus..genus; outside the table h(k) = 0 for k >= genus
    and h(k) = -k for k <= -genus.  Construction enforces nonnegativity, the
    unit-step monotone decrease h(k+1) <= h(k) <= h(k+1) + 1 and the symmetry
    h(-k) = h(k) + k.
    """

    genus: int
    values: dict

    def __post_init__(self):
        g = self.genus
        if g < 0:
            raise ValueError("genus must be nonnegative")
        table = dict(self.values)
        if set(table) != set(range(-g, g + 1)):
            raise ValueError("table must cover exactly the range -%d..%d" % (g, g))
        if table[g] != 0:
            raise ValueError("h(%d) = %d but the upper tail is 0" % (g, table[g]))
        for k in range(-g, g + 1):
            if table[k] < 0:
                raise ValueError("negative value h(%d) = %d" % (k, table[k]))
        for k in range(-g, g):
            step = table[k] - table[k + 1]
            if step not in (0, 1):
                raise ValueError("unit-step monotonicity fails between k=%d and k=%d" % (k, k + 1))
        for k in range(0, g + 1):
            if table[-k] != table[k] + k:
                raise ValueError("symmetry h(-k) = h(k) + k fails at k=%d" % k)
        object.__setattr__(self, "values", table)

    def __call__(self, k: int) -> int:
        if k >= self.genus:
            return 0
        if k <= -self.genus:
            return -k
        return self.values[k]


def h_from_alexander(polynomial: AlexanderPolynomial) -> HFunction:
    """h-function of an L-space knot from its Alexander polynomial.

    The caller is responsible for the knot actually being an L-space knot;
    if the torsion coefficients violate the h-function shape, the polynomial
    cannot belong to one and a ValueError is raised.
    """
    g = polynomial.degree
    table = {k: torsion_coefficient(polynomial, k) for k in range(-g, g + 1)}
    try:
        return HFunction(g, table)
    except ValueError as err:
        raise ValueError("not an L-space-knot polynomial: %s" % err) from None


def cable_h_diagonal(k: int) -> int:
    """Diagonal h-values h(k, k) of the (2,4)-cable of the positive trefoil.

    Both cable components are oriented the same way.  Only these published
    diagonal values are carried; the general cable formula is out of scope.
    """
    if k >= 2:
        return 0
    if k in (0, 1):
        return 1
    if k == -1:
        return 3
    return -2 * k
