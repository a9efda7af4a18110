import math

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def units(d):
    return [a for a in range(1, d) if math.gcd(a, d) == 1]


def brute_order(a, n):
    a %= n
    x, k = a, 1
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k
