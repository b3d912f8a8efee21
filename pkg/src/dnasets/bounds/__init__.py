from .asymptotic import (ROWS, asymptotic_redundancy, evaluate, render, render_table2)
from .exact import (BoundValue, avg_del_sphere_power_bound, gv_arbitrary, gv_del, gv_sub,
                    indexing_redundancy, indexing_redundancy_leading, sp_arbitrary,
                    sp_arbitrary_redundancy, sp_insertion, space_log2)
from .report import BoundReport, bound_report, round_sig, table2_report

__all__ = [
    "ROWS", "asymptotic_redundancy", "evaluate", "render", "render_table2", "BoundValue",
    "avg_del_sphere_power_bound", "gv_arbitrary", "gv_del", "gv_sub", "indexing_redundancy",
    "indexing_redundancy_leading", "sp_arbitrary", "sp_arbitrary_redundancy",
    "sp_insertion", "space_log2", "BoundReport", "bound_report", "round_sig",
    "table2_report",
]
