"""Eigenspaces of a generator on P_(s).

On the basis {z_w : w in W^(s)} the idempotent e_t fixes z_w when t is a
left descent of w and otherwise sends z_w to z_tw, which lies in W^(s)
again. The two element orbits {w, tw} give the kernel.
"""

# Repmin
from api.repmin.linalg import nullspace, vectors_rank
from api.repmin.modules import element_basis

# Models
from api.repmin.models import RationalMatrix


def eigen_structure(module, t):
    system = module.system
    elements = element_basis(module)
    position = {w: k for k, w in enumerate(elements)}
    fixed, kernel = [], []
    for k, w in enumerate(elements):
        if t in system.left_descents(w):
            fixed.append(module.basis_vector(k))
        else:
            image = position[system.left[w][t]]
            kernel.append(tuple(int(i == k) - int(i == image) for i in range(module.dimension)))
    return {'fixed_basis': fixed, 'kernel_basis': kernel}


def eigen_check(module, t):
    """Compare eigen_structure with the eigenspaces found by elimination."""
    structure = eigen_structure(module, t)
    matrix = module.action(t)
    identity = RationalMatrix.identity(module.dimension, module.modulus)
    fixed, kernel = structure['fixed_basis'], structure['kernel_basis']
    size, modulus = module.dimension, module.modulus
    return (
        all(matrix.apply(v) == v for v in fixed)
        and all(not any(matrix.apply(v)) for v in kernel)
        and vectors_rank(fixed, size, modulus) == len(fixed) == len(nullspace(matrix - identity))
        and vectors_rank(kernel, size, modulus) == len(kernel) == len(nullspace(matrix))
        and vectors_rank(fixed + kernel, size, modulus) == size
    )
