"""Integer helpers for the small orders handled here."""


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorization of ``n >= 1`` as an ordered ``{prime: exponent}`` dict."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n):
    return sorted(factorize(n))


def p_part(n, p):
    k = 1
    while n % p == 0:
        n //= p
        k *= p
    return k


def primitive_root(p):
    """Smallest generator of the multiplicative group mod the prime ``p``."""
    if p == 2:
        return 1
    phi = p - 1
    qs = prime_divisors(phi)
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in qs):
            return g
    raise ValueError(f"{p} is not prime")
