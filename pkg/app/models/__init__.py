from app.models.partition import Composition, Partition, as_composition, partitions_of
from app.models.tableau import StandardTableau, SlidePath, EvacuationTrace
from app.models.qpolynomial import QPolynomial
from app.models.permutation import Permutation
from app.models.cell import CellIndex
from app.models.guemes_tableau import GuemesTableau
