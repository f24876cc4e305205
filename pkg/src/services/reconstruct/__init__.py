"""
Reconstruction Module Public API
Dışarıdan sadece bu interface'ler kullanılacak.
"""
from .coordinate import reconstruct_1d, reconstruct_nf1
from .dispatcher import OPEN_PROBLEM_MESSAGE, run_reconstruction, select_algorithm
from .dtos import InitializationScheme, ProbeRecord, ProbeState2D, ReconstructionReport, VertexBudget
from .lifting import reconstruct_nd_nf3
from .pairing import reconstruct_nd_nf2
from .planar import classify_probe, reconstruct_2d

__all__ = [
    "InitializationScheme",
    "OPEN_PROBLEM_MESSAGE",
    "ProbeRecord",
    "ProbeState2D",
    "ReconstructionReport",
    "VertexBudget",
    "classify_probe",
    "reconstruct_1d",
    "reconstruct_2d",
    "reconstruct_nd_nf2",
    "reconstruct_nd_nf3",
    "reconstruct_nf1",
    "run_reconstruction",
    "select_algorithm",
]
