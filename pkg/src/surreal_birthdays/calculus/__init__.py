"""生日演算：f(n, m) 递推、增长推论与验证套件"""

from .recurrence import (
    BirthdayRecurrence, f, f_table, square_diagonal, diagonal_ratio, square_diagonal_asymptote,
    asymptote_errors, pow2_generation, pow2_constant_check,
)
from .operands import OperandFactory
from .verification import (
    SUITES, BirthdayReport, CheckResult, ProductMeasurement, VerificationHarness,
    verify_birthday_addition, verify_birthday_multiplication, addition_table, multiplication_table,
)

__all__ = [
    'BirthdayRecurrence', 'f', 'f_table', 'square_diagonal', 'diagonal_ratio',
    'square_diagonal_asymptote', 'asymptote_errors', 'pow2_generation', 'pow2_constant_check',
    'OperandFactory',
    'SUITES', 'BirthdayReport', 'CheckResult', 'ProductMeasurement', 'VerificationHarness',
    'verify_birthday_addition', 'verify_birthday_multiplication', 'addition_table',
    'multiplication_table',
]
