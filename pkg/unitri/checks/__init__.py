"""
Checks module - one module per step of the verification pipeline.

Available checks, in pipeline order:
- homomorphism: phi([u, v]) = [phi(u), phi(v)] on every pair inside the domain
- injectivity: phi has trivial kernel on the whole domain
- generators: ideal preservation and phi(d_i) = lambda_i d_i + u_i, lambda_i != 0
- normalization: builds sigma and psi = sigma^{-1} . phi
- levels: psi preserves each N_i and has full rank there
"""

__all__ = [
    "homomorphism",
    "injectivity",
    "generators",
    "normalization",
    "levels",
]
