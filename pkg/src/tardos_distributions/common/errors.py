from typing import Optional


# DOC: TardosError is the single exception raised by the package. It carries the operation that failed, an error type, a human readable reason and optional data about the offending values.

class TardosError(Exception):


    # DOC: TardosErrorType enumerates the kinds of failures; the cli maps each kind to an exit status.
    class TardosErrorType():
        INVALID_INPUT = "INVALID_INPUT"
        MISSING_ARGS = "MISSING_ARGS"
        INVALID_ARGS = "INVALID_ARGS"
        NUMERICAL_FAILURE = "NUMERICAL_FAILURE"
        NON_INTEGRABLE = "NON_INTEGRABLE"
        UNUSABLE_CONFIGURATION = "UNUSABLE_CONFIGURATION"
        IO_FAILURE = "IO_FAILURE"

    # DOC: An instance needs the failing operation name, the error type, the reason and optional data depending on the type
    def __init__(self, error_source: str, error_type: str, error_reason: str, error_data: Optional[dict] = None):
        super().__init__(error_reason)
        self.source = error_source
        self.type = error_type
        self.reason = error_reason
        self.data = error_data if error_data is not None else dict()

    @property
    def message(self):
        return f"{self.source}: {self.reason}"

    @property
    def as_dict(self):
        return {
            "source": self.source,
            "type": self.type,
            "reason": self.reason,
            "data": self.data,
        }


def invalid_input(source: str, reason: str, **data) -> TardosError:
    return TardosError(source, TardosError.TardosErrorType.INVALID_INPUT, reason, data)
