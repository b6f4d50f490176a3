"""Numeric tolerances used across the package.

All thresholds live in one frozen dataclass so a CLI flag can override a
value once and every downstream check sees it.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # root finding
    root_residual: float = 1e-10   # backward error |f(s)| / sum |c_i||s|^i
    cluster_rel: float = 1e-7      # relative distance merging root clusters
    separation: float = 1e-6       # minimal distance between simple roots
    # root classification
    classify_rel: float = 1e-8     # |Im| resp. |Re| <= classify_rel*(1+|s|)
    unit_circle: float = 1e-8      # ||s|-1| threshold
    unit_circle_exclusion: float = 1e-6  # non-trivial roots must stay this far
    # representation residuals
    residual: float = 1e-8         # relator / filling / variety residuals
    trace: float = 1e-9            # |tr rho(mu1) -+ 2|
    det_one: float = 1e-10         # |det - 1| for constructed matrices
    t_match: float = 1e-7          # |s^p t^q - 1| selecting the t branch
    faithful_defect: float = 1e-3  # filling defect required at s = +-1
    char_pair: float = 1e-7        # trace agreement between s and 1/s reps
    # linear algebra
    rank_rel: float = 1e-8         # singular values below rank_rel*smax -> 0
    det_rel: float = 1e-8          # relative determinant agreement
    root_avoid: float = 1e-3       # min distance between disjoint root sets

    def with_overrides(self, **kwargs) -> "Tolerances":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


TOL = Tolerances()
