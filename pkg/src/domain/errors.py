"""
Domain Errors
Rekonstrüksiyon sırasında oluşabilecek hatalar.

CLI bu sınıfları çıkış kodlarına, API ise HTTP durum kodlarına eşler.
"""
from typing import Optional


class ReconstructionError(Exception):
    """Tüm domain hatalarının kökü."""


class InconsistentOracle(ReconstructionError):
    """
    Oracle cevabı kesin durum analiziyle çelişiyor.

    Gürültülü oracle ile görülen "stall" durumu burada yüzeye çıkar.
    """

    def __init__(self, message: str, call_index: Optional[int] = None):
        super().__init__(message)
        self.call_index = call_index


class EmptyIntersection(InconsistentOracle):
    """Üretilen yarı-uzaylar boş küme veriyor."""


class BudgetExhausted(ReconstructionError):
    """Verilen köşe bütçesi aşıldı (n̄f < n_v)."""


class DimensionMismatch(ReconstructionError, ValueError):
    """Vektör boyutu oracle boyutuyla uyuşmuyor."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"Boyut uyuşmazlığı: beklenen {expected}, gelen {actual}")
        self.expected = expected
        self.actual = actual


class DegenerateTriple(ReconstructionError, ValueError):
    """a = c ya da b, (a, c) doğrusu üzerinde."""


class SingularLift(ReconstructionError):
    """Üç köşeli kaldırma sistemi çözümsüz."""


class UnsupportedProblem(ReconstructionError):
    """(boyut, bütçe) kombinasyonu desteklenmiyor."""


class InvalidInitialization(ReconstructionError, ValueError):
    """Başlangıç yön kümesi düzlemi pozitif germiyor."""
