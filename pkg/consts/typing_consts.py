from typing import Callable

import numpy as np
from numpy.typing import NDArray

RealArray = NDArray[np.float64]
ComplexArray = NDArray[np.complex128]
RadialFunction = Callable[[RealArray], RealArray]
Multiplier = Callable[[RealArray], ComplexArray]
