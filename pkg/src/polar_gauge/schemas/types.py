# schemas/types.py

from typing import Annotated

from pydantic import AfterValidator, BeforeValidator, Field

from .validators import require_non_empty, to_float_tuple, to_matrix

# Finite coordinates, converted from any list, tuple or numpy array.
FloatTuple = Annotated[tuple[float, ...], BeforeValidator(to_float_tuple)]

# Finite coordinates with at least one entry.
VectorReq = Annotated[
    tuple[float, ...],
    BeforeValidator(to_float_tuple),
    AfterValidator(require_non_empty),
]

# Dense row-major matrix with rectangular shape and finite entries.
MatrixReq = Annotated[tuple[tuple[float, ...], ...], BeforeValidator(to_matrix)]

# Strictly positive finite scalar.
PositiveFloat = Annotated[float, Field(gt=0, allow_inf_nan=False)]

# Nonnegative finite scalar.
NonNegativeFloat = Annotated[float, Field(ge=0, allow_inf_nan=False)]
