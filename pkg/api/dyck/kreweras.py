"""First derivative of the Kreweras involution.

For p = Delta(a) the image is Delta(alpha(pi_a^-1)), pi_a being the unique
321-avoiding permutation with alpha(pi_a) = a.
"""

# Models
from api.dyck.models import DyckPath

# Dyck
from api.dyck.bijection import delta, delta_inverse

# Dcm
from api.dcm.fibers import catalan_pi

# Perms
from api.perms.statistics import alpha


def kreweras_derivative(path):
    pi = catalan_pi(delta_inverse(path))
    return delta(alpha(pi.inverse()))


def is_componentwise(path):
    """Whether the image is the concatenation of the images of the irreducible factors."""
    factors = path.components()
    if len(factors) < 2:
        return True
    image = DyckPath('')
    for factor in factors:
        image = image + kreweras_derivative(factor)
    return image == kreweras_derivative(path)
