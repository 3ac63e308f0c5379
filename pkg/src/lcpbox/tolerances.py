"""Shared numeric tolerances.

All verdicts in this library are tolerance-classified so that repeated runs
on the same input are bit-for-bit reproducible. Pivot and eigenvalue
tolerances are scale-relative; spectral-radius threshold comparisons are
absolute.
"""

# Factorization pivots: |pivot| <= PIVOT_TOL * max|entry| classifies as zero.
PIVOT_TOL = 1e-10

# Eigenvalue / semidefiniteness: lambda_min >= -EIG_TOL * ||M||_inf passes.
EIG_TOL = 1e-9

# Spectral-radius threshold comparisons (rho vs. 1) use an absolute margin.
RHO_TOL = 1e-9

# Power iteration convergence and iteration cap.
POWER_TOL = 1e-10
POWER_MAX_ITER = 10_000

# LP feasibility: row residuals of a witness must stay within this.
LP_TOL = 1e-9

# Complementarity solutions: residual / nonnegativity slack.
LCP_TOL = 1e-8

# Default enumeration caps (overridable through CheckConfig / CLI flags).
CAP_POINT_ENUM = 16       # 2^n / 3^n subset enumerations on a real matrix
CAP_SIGN_VERTEX = 14      # 2^n sign-vertex enumerations on a box
CAP_INDEX_PAIRS = 10      # 3^n disjoint index-pair enumerations on a box
CAP_NONDEGENERATE = 8     # 5^n support/sign enumeration for nondegeneracy
