"""Compressed index for circular dictionary matching."""

from .dictionary import Dictionary, compute_root
from .index import CdmIndex
from .matcher import cdm, cdm_adaptive
from .oracle import NaiveIndex, naive_cdm

__all__ = ["CdmIndex", "Dictionary", "NaiveIndex", "cdm", "cdm_adaptive", "compute_root", "naive_cdm"]
__version__ = "0.1.0"
