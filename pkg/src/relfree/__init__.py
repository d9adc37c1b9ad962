"""Free-subgroup detection for one-relator relative presentations."""

from .backends import (Backend, Z, free_abelian, free_group,
                       cyclic_index, cyclic_membership, coset_complement,
                       smith_invariants)
from .words import ParseError, RelativeWord
from .analysis import (Form1, CosetForm, complexity, coset_rewrite,
                       is_proper_power, is_unimodular_cyclic,
                       is_unimodular_general, to_form1)
from .whitehead import whitehead_minimize
from .classify import (Classification, RelativePresentation, WitnessPair,
                       classify, computable_model, fact1_criterion,
                       fact2_lift, lemma_witnesses, recognize_bs12)
from .engines import (CyclicAmalgam, FreeProduct, HnnWord, ModelPair,
                      bounded_no_relation_check, britton_reduce, bs12_matrix)

__all__ = [
    "Backend", "Z", "free_abelian", "free_group",
    "cyclic_index", "cyclic_membership", "coset_complement",
    "smith_invariants",
    "ParseError", "RelativeWord",
    "Form1", "CosetForm", "complexity", "coset_rewrite", "is_proper_power",
    "is_unimodular_cyclic", "is_unimodular_general", "to_form1",
    "whitehead_minimize",
    "Classification", "RelativePresentation", "WitnessPair", "classify",
    "computable_model", "fact1_criterion", "fact2_lift", "lemma_witnesses",
    "recognize_bs12",
    "CyclicAmalgam", "FreeProduct", "HnnWord", "ModelPair",
    "bounded_no_relation_check", "britton_reduce", "bs12_matrix",
]

__version__ = "0.1.0"
