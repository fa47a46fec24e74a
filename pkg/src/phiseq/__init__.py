"""Complete Phi_kappa-sequences over F_p.

A Phi_kappa-sequence has ``a_0 = 1`` and ``a_{n+kappa} = a_n + a_{n+1}``; it is
complete when its first ``p - 1`` terms run through every nonzero residue and
it then repeats.  The package generates and searches such sequences, studies
the Padovan case ``kappa = 3`` through the roots of ``X^3 - X - 1``, and runs
verification campaigns over prime ranges.
"""

from .errors import PhiSeqError
from .fp_core import PrimeContext, get_context, is_primitive_root, multiplicative_order
from .phi_sequences import PhiSequence, exhaustive_search, generate, guided_search_padovan, periodic_search
from .polyring import CubicProfile, FpPoly, cubic_roots
from .verifier import CampaignConfig, CampaignReport, VerificationRecord, run_campaign

__version__ = "0.1.0"
