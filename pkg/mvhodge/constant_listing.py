import inspect
from typing import Any, List, Optional


class ConstantListing:
    def get_all(self) -> List[str]:
        """ Returns list of strings of the attributes of the provided class """
        provided_class = self.__class__
        attributes = inspect.getmembers(provided_class, lambda a: not (inspect.isroutine(a)))
        return [a[0] for a in attributes if not (a[0].startswith('__') and a[0].endswith('__'))]

    def get_all_values(self) -> List[Any]:
        return list(map(lambda x: getattr(self, x), self.get_all()))

    def get(self, key: str) -> Optional[Any]:
        if key not in self.get_all():
            return None
        return getattr(self, key)

    def contains(self, value: Any) -> bool:
        return value in self.get_all_values()

    def reverse_lookup(self, value: Any) -> Optional[str]:
        for key in self.get_all():
            if getattr(self, key) == value:
                return key
        return None


class IdentityName(ConstantListing):
    MUMFORD = "mumford"
    EQ26 = "eq26"
    EQ31 = "eq31"
    EQ32 = "eq32"
    EQ36 = "eq36"
    THM31 = "thm31"
    THM52 = "thm52"
    THM53 = "thm53"
    THM41_VS_ENGINE = "thm41-vs-engine"
    THM32_VS_ENGINE = "thm32-vs-engine"
    VNU_EQUIVALENCE = "vnu-equivalence"
    F_CLOSED_VS_BRUTE = "f-closed-vs-brute"


class ExitCode(ConstantListing):
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USER_ERROR = 2
    CONSISTENCY_ERROR = 3


class TableFamily(ConstantListing):
    BERNOULLI = "bernoulli"
    BG = "bg"
    LAMBDA1_LAMBDAG = "lambda1-lambdag"
    THM32 = "thm32"
    LAMBDA_G = "lambda-g"
    LAMBDA_GM1 = "lambda-gm1"
