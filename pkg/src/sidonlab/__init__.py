"""Singer difference sets, modular-to-interval Sidon transfers, and exact h(N)."""

from .extremal import (
    HResult,
    HSolver,
    bertrand_lower,
    bounds_row,
    h_exact,
    johnson_upper,
    pair_diff_upper,
    partial_check,
)
from .ff import FFElement, FieldSpec, discrete_log, find_generator, find_irreducible, get_field, rel_trace
from .sidon import SidonCert, check_identities, is_interval_sidon, is_sidon, is_sidon_mod
from .singer import SingerSet, build_singer_set, verify_perfect_difference_set
from .transfer import TransferResult, best_offset, full_transfer, gap_profile, singer_threshold, window_restrict

__version__ = "0.1.0"
