from enum import auto, Enum


class Variant(Enum):
    """ Which generalized insertion: the plain sum or the alternating sum over l. """
    PLAIN = auto()
    ALT = auto()

class Bracket(Enum):
    LIE = auto()
    SUPER = auto()

class Involution(Enum):
    PRIME = auto()
    OPP = auto()
    BAR = auto()

    def sign_exponent(self, order: int) -> int:
        match self:
            case Involution.PRIME:
                return order
            case Involution.OPP:
                return order * (order - 1) // 2
            case Involution.BAR:
                return order * (order + 1) // 2

class Parity(Enum):
    EVEN = 0
    ODD = 1

    @staticmethod
    def of(order: int) -> 'Parity':
        return Parity.ODD if order % 2 else Parity.EVEN

class RepKind(Enum):
    EXT = auto()
    SYM = auto()
    CLW = auto()

class OutputFormat(Enum):
    TABLE = auto()
    TSV = auto()


AlgebraTypeNames = {
    'plain': Variant.PLAIN,
    'alt': Variant.ALT,
    'lie': Bracket.LIE,
    'super': Bracket.SUPER,
    'prime': Involution.PRIME,
    'opp': Involution.OPP,
    'bar': Involution.BAR,
    'ext': RepKind.EXT,
    'sym': RepKind.SYM,
    'clw': RepKind.CLW,
    'table': OutputFormat.TABLE,
    'tsv': OutputFormat.TSV,
}
