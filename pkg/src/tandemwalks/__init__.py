"""Bijections between half-plane and quarter-plane lattice walks, realised by
counter transducers, two-stack pushdown transducers and raising algorithms."""

from .words import (Word, parse_word, format_word, is_member, lukasiewicz, tandem, BICOL, SYM, YAM,
                    MOTZKIN, QUARTER, QSYM, YAMANOUCHI, BICOL_MOTZKIN, HALF_PLANE, lukasiewicz_class,
                    ptandem_class)
from .transducer import phi_p, psi_p, psi_p_augmented, TransductionError
from .sixstep import phi_sym, psi_sym, two_n_projection, two_n_lift
from .raising import raising_p1, raising_sym, raising_general, eu_three_pass, RaisingError
from .pda import build_p1_pdt, generate_pdt, run_pdt

__version__ = "0.1.0"
