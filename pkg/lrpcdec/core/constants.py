"""Constants defined for lrpcdec

Attributes
----------
MAX_CHARACTERISTIC: int
    Largest base field size q accepted by make_field, 2^16
MAX_EXTENSION_DEGREE: int
    Largest extension degree m accepted by make_field, 1024
DEFAULT_ENUMERATION_CAP: int
    Largest number of elements a subspace enumeration may produce, 2^24
DEFAULT_CANDIDATE_CAP: int
    Largest (q^d - 1) * q^dim(S) the multiset decoder will enumerate, 2^24
DEFAULT_MAX_ROUNDS: int
    Round budget of the t-fold intersection decoder, 64
MAX_CODE_RESAMPLES: int
    Number of parity-check matrices drawn before giving up on full rank, 100
DEFAULT_MAX_RESAMPLES: int
    Number of degenerate (code, error) pairs a trial may discard, 100
SCHEMA_VERSION: int
    Version of the experiment summary schema
FIXTURE_VERSION: int
    Version of the text fixture format
FIXTURE_FORMAT: str
    Format tag written into every fixture
"""

MAX_CHARACTERISTIC: int = 2**16

MAX_EXTENSION_DEGREE: int = 1024

DEFAULT_ENUMERATION_CAP: int = 2**24

DEFAULT_CANDIDATE_CAP: int = 2**24

DEFAULT_MAX_ROUNDS: int = 64

MAX_CODE_RESAMPLES: int = 100

DEFAULT_MAX_RESAMPLES: int = 100

SCHEMA_VERSION: int = 1

FIXTURE_VERSION: int = 1

FIXTURE_FORMAT: str = "lrpcdec-fixture"
