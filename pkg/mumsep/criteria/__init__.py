from mumsep.criteria.assignment import assignmentMax, multiAssignment
from mumsep.criteria.bipartite import Bipartite, bound2, bound3, theorem2, theorem3
from mumsep.criteria.coincidence import MubCriterion
from mumsep.criteria.coincidence import coincidence, coincidenceBound, coincidenceSum, mubIndex
from mumsep.criteria.common import CriterionFactory, CriterionReport
from mumsep.criteria.common import Criterion  # noqa: F401
from mumsep.criteria.fullsep import FullSeparability, bound1, lemma1Gap, theorem1
from mumsep.criteria.multipartite import Multipartite, bound4, bound5, kNonsepCheck, theorem45


CriterionFactory.register(MubCriterion)
CriterionFactory.register(FullSeparability)
CriterionFactory.register(Bipartite)
CriterionFactory.register(Multipartite)


def evaluate(theorem, sets, rho, **kwargs):
    """Run the criterion registered as `theorem` and return its report."""
    return CriterionFactory.create(theorem, sets, rho, **kwargs).run()


__all__ = [
    'assignmentMax',
    'bound1',
    'bound2',
    'bound3',
    'bound4',
    'bound5',
    'coincidence',
    'coincidenceBound',
    'coincidenceSum',
    'CriterionFactory',
    'CriterionReport',
    'evaluate',
    'kNonsepCheck',
    'lemma1Gap',
    'mubIndex',
    'multiAssignment',
    'theorem1',
    'theorem2',
    'theorem3',
    'theorem45',
]
