from consts.scattering_consts import COMPLETENESS_TEST_WIDTHS
from grids.axisymmetric_field import AxisymmetricField
from scattering.scattering_table import ScatteringTable
from transform.distorted_fourier_transform import get_transform
from transform.field_families import gaussian_profile


def completeness_defect(table: ScatteringTable) -> float:
    """
    sup over Gaussian test functions r^l e^{−r²/(2σ²)}, l ≤ L, of |‖f‖² − ‖f♯‖²| / ‖f‖². Mass carried by bound
    states is invisible to the continuum transform and shows up here.
    """
    transform = get_transform(table)
    defects = []

    for l in range(table.l_max + 1):
        for width in COMPLETENESS_TEST_WIDTHS:
            field = AxisymmetricField.from_radial(table.radial_grid, gaussian_profile(width, l), l=l)
            mass = field.mass()
            defects.append(abs(mass - transform.forward(field).norm() ** 2) / mass)

    return max(defects)
