from twostep.acs.classify import ClassificationFlags, classify_acs, decompose_bracket
from twostep.acs.complexify import anticomplexify, complexify, doubled_metric, realify
from twostep.acs.conjugation import (
    ConjugationSplit,
    conjugate,
    conjugate_bracket,
    conjugate_structure,
    conjugation_split,
)
from twostep.acs.flip import j_flip
from twostep.acs.structures import AlmostComplexStructure
