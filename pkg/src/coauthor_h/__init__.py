"""Co-authorship popularity H-matrices.

Build the matrix of individual and joint h-indices for a team of co-authors,
eigendecompose it, and read off team-aware ("effective") h values.

>>> from coauthor_h import jacobi_eigen
>>> round(jacobi_eigen([[35, 10], [10, 11]]).lambda1, 3)
38.62
"""

from .analysis import (SubsetAverage, TeamReport, report_from_matrix, subset_average,
                       subset_average_matrix, team_report)
from .bibfetch import RawWorkRecord, ReplayTransport, fetch_author_works, fetch_corpus, normalize
from .corpus import AuthorStats, Corpus, Paper, author_stats, load_corpus, validate
from .eigen import EigenDecomposition, PrincipalWeights, effective_h, jacobi_eigen, principal_lc1
from .errors import ConvergenceError, CorpusError, DataError, MatrixError, UnknownAuthorError
from .fractional import (FNRS, PLAIN, SCHREIBER, FractionalHValue, WeightScheme, fractional_h,
                         fractional_hmatrix, scheme_weights)
from .hmatrix import HMatrix, build, load_matrix, order_by_h
from .metrics import HIndexValue, h_index, joint_h, joint_papers

__version__ = "0.1.0"
