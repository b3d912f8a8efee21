from .bch import BCHCode, bch_code, gf2_rank
from .gf import GF2m, PRIMITIVE_POLYS, default_modulus, is_irreducible
from .mds import MDSCode, mds_decode, mds_encode
from .vt import (VtCode, info_length, parity_positions, vt_checksum, vt_decode,
                 vt_extract_info, vt_systematic_encode)

__all__ = [
    "BCHCode", "bch_code", "gf2_rank", "GF2m", "PRIMITIVE_POLYS", "default_modulus",
    "is_irreducible", "MDSCode", "mds_decode", "mds_encode", "VtCode", "info_length",
    "parity_positions", "vt_checksum", "vt_decode", "vt_extract_info",
    "vt_systematic_encode",
]
