from .bootstrap import BootstrapSummary, Interval, bootstrap_metrics
from .metrics import (
    StateMetrics, analyze, antisqueezing_db, fidelity_to_pure, gaussian_fidelity, grid_quadrature_std, ks_statistic,
    normalized_overlap, purity_gaussian, purity_grid, squeezing_db,
)
from .modes import ModeFit, fit_mode_number
