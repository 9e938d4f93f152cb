"""Exception types raised by lrpcdec

Every exception derives from LrpcError so that callers (the CLI in particular) can
separate our failures from unexpected ones. Configuration problems and resource
limits get their own classes because the CLI maps them to distinct exit codes.
"""


class LrpcError(Exception):
    """Base class of all lrpcdec errors"""


class FieldError(LrpcError, ValueError):
    """Invalid field parameters or an illegal field operation (e.g. inverse of zero)"""


class SubspaceError(LrpcError, ValueError):
    """Invalid subspace operation (shift by zero, impossible dimension, mixed fields)"""


class ResourceLimitError(LrpcError):
    """An enumeration or candidate set would exceed its configured cap"""


class CodeGenerationError(LrpcError):
    """A random code or instance could not be generated within its resample budget"""


class DecoderError(LrpcError, ValueError):
    """A decoder was called with arguments it cannot work with"""


class ConfigError(LrpcError, ValueError):
    """Inconsistent experiment configuration"""


class FixtureFormatError(LrpcError, ValueError):
    """A serialized fixture has the wrong format, kind or version"""
