import cmath
import itertools
from fractions import Fraction

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def brute_tilings(f, moduli):
    """All translate sets A with f + A = G exactly, by subset enumeration."""
    g = list(itertools.product(*(range(m) for m in moduli)))
    order = len(g)
    if order % len(f):
        return []
    size = order // len(f)
    out = []
    for a in itertools.combinations(g, size):
        hit = set()
        ok = True
        for t in a:
            for p in f:
                c = tuple((x + y) % m for x, y, m in zip(p, t, moduli))
                if c in hit:
                    ok = False
                    break
                hit.add(c)
            if not ok:
                break
        if ok and len(hit) == order:
            out.append(a)
    return out


def float_fourier(f, moduli, xi):
    total = 0j
    for p in f:
        phase = sum(Fraction(x * k, m) for x, k, m in zip(p, xi, moduli))
        total += cmath.exp(2j * cmath.pi * float(phase))
    return total


def float_zero_set(f, moduli, tol=1e-9):
    return {
        xi
        for xi in itertools.product(*(range(m) for m in moduli))
        if abs(float_fourier(f, moduli, xi)) < tol
    }


def brute_spectra(f, moduli):
    """Every orthogonal set of size |f| containing 0, by subset enumeration."""
    zeros = float_zero_set(f, moduli)
    zero = tuple(0 for _ in moduli)
    others = [x for x in itertools.product(*(range(m) for m in moduli)) if x != zero]
    found = []
    for combo in itertools.combinations(others, len(f) - 1):
        lam = (zero,) + combo
        if all(
            tuple((x - y) % m for x, y, m in zip(p, q, moduli)) in zeros
            for p, q in itertools.combinations(lam, 2)
        ):
            found.append(lam)
    return found


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
