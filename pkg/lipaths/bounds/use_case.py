from collections import Counter
import logging
from typing import Iterator, Optional, Sequence

from lipaths._shared.models import BoundsGrid
from lipaths._shared.schemas import BoundsRow
from lipaths.bounds import service as bounds_service
from lipaths.utils.bigreal import precision
from lipaths.utils.exceptions import exception_2_INVALID_ARGUMENT
from lipaths.utils.settings import BOUNDS_MAX_PRECISION, BOUNDS_PRECISION, PARAM_CHECK_T_MAX


logger = logging.getLogger(__name__)

service = bounds_service

GRIDS = ("default",)


class BoundsUseCase:

    def __init__(self):
        self.service = service
        self.verdicts: Counter = Counter()

    def grid(
        self,
        name: str = "default",
        rs: Optional[Sequence[int]] = None,
        t_max: int = 20,
        bits: Optional[int] = None,
    ) -> BoundsGrid:
        if name not in GRIDS:
            raise exception_2_INVALID_ARGUMENT(f"unknown grid '{name}'. Valid grids: {', '.join(GRIDS)}")
        if t_max < 1:
            raise exception_2_INVALID_ARGUMENT(f"--t-max must be >= 1, got {t_max}")
        bits = bits or BOUNDS_PRECISION
        if bits < 53 or bits > BOUNDS_MAX_PRECISION:
            raise exception_2_INVALID_ARGUMENT(f"precision must lie in [53,{BOUNDS_MAX_PRECISION}], got {bits}")
        default = BoundsGrid()
        return BoundsGrid(rs=tuple(rs) if rs else default.rs, t_max=t_max, precision=bits)

    def params_compliant(self, bits: int) -> bool:
        with precision(bits):
            params = self.service.default_params()
            return params.compliant and self.service.check_param_fns(params, PARAM_CHECK_T_MAX)

    def rows(self, grid: BoundsGrid) -> Iterator[BoundsRow]:
        for row in self.service.sweep(grid):
            self.verdicts[row.verdict] += 1
            yield row
        logger.info("bounds sweep finished: %s", dict(self.verdicts))

    @property
    def passed(self) -> bool:
        # Regra: só "pass" conta como verificado; "rejected" não ocorre no grid padrão
        return set(self.verdicts) <= {"pass"}
