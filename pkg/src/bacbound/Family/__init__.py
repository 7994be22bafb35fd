from .GroundSet import GroundSet, FamilyError, GroundSetError
from .ProjectionMultiset import ProjectionMultiset
from .Family import Family, FamilyGroundMismatchError, FamilyDuplicateMemberError, FamilySearchBudgetError, FamilyParseError
from .SoftSauerParams import SoftSauerParams, SoftSauerParamsError
from .softSauerProcedures import softSauerBound, softSauerLevelBound, sauerBound, corollaryShatterSize, FamilyDomainError
from .familyProcedures import sumKey, isMultisetUnionFree, sComplementPairCount, systematicFamily, randomFamily, hammingBall
from .PairSearch import PairSearch, PairSearchResult, PairSearchError, exhaustivePairSearch
