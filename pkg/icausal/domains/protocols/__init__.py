"""End-to-end ICS protocols: teleportation, channels, entanglement, discrimination and NLWE."""

from .base import Branch, CorrectionTable, ProtocolResult, Transcript, TranscriptEntry
from .tables import correction_table
from .teleport import backteleport_2ics, roundtrip, teleport_2ics, teleport_3ics, teleport_4ics, teleport_mics
from .entangle import EntangledOutcome, entangle_2ics, entangle_result
from .channel import apply_directly, channel_result, implement_nonlocal_channel
from .bell import BELL_TABLE, bell_branches, discriminate_bell
from .smolin import CUTS, DAN_CORRECTIONS, ppt_report, smolin_density, unlock_smolin
from .nlwe import (
    NlweCorpus, corpus_from_dict, discriminate_global, gram_matrix, is_product, load_corpus,
    nlwe_result, reduce_nlwe, validate_corpus,
)
from .search import SearchResult, conditional_maps, search_corrections, shift_unitaries

__all__ = [
    "Branch", "CorrectionTable", "ProtocolResult", "Transcript", "TranscriptEntry",
    "correction_table",
    "backteleport_2ics", "roundtrip", "teleport_2ics", "teleport_3ics", "teleport_4ics", "teleport_mics",
    "EntangledOutcome", "entangle_2ics", "entangle_result",
    "apply_directly", "channel_result", "implement_nonlocal_channel",
    "BELL_TABLE", "bell_branches", "discriminate_bell",
    "CUTS", "DAN_CORRECTIONS", "ppt_report", "smolin_density", "unlock_smolin",
    "NlweCorpus", "corpus_from_dict", "discriminate_global", "gram_matrix", "is_product", "load_corpus",
    "nlwe_result", "reduce_nlwe", "validate_corpus",
    "SearchResult", "conditional_maps", "search_corrections", "shift_unitaries",
]
