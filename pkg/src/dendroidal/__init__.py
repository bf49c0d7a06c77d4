"""Dendroidal sets: trees, the category Omega, operads and their nerves,
inner horn filling, homotopy operads, tensor products of representables
and anodyne-extension certificates."""
from .trees import Tree, Vertex, Signature, corolla, eta, linear, graft, enumerate_trees
from .omega import OmegaArrow, faces, arrows_between
from .operad import ColoredOperad, omega_operad, planar_omega_operad, symmetrize, validate
from .dset import DendroidalSet, NerveDSet, horn, boundary, is_normal
from .kan import check_inner_kan, ho_operad, homotopic, coskeletal_extend
from .percolation import enumerate_schemes, tensor
from .anodyne import (certify_grafting, certify_multi_horn, certify_tensor_extension,
                      verify_certificate)
from .grothendieck import integrate, integrate_fill_horn

__version__ = "0.1.0"
