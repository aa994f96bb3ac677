"""
Virasoro non-weight modules - exact computations in M(V, mu, Omega(lambda, alpha)).

A small symbolic toolkit for:
- Exact arithmetic over the Gaussian rationals and polynomials in d
- Induced modules over the positive part and their exponential derivations
- The tensor module action, its submodules and isomorphisms
- Verification suites with JSON reports and a command-line front end
"""

__version__ = "0.1.0"
