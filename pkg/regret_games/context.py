from contextvars import ContextVar
from uuid import uuid4

# Id of the HTTP request or CLI run that log lines belong to.
REQUEST_ID: ContextVar[str] = ContextVar("REQUEST_ID", default="-")


def new_request_id() -> str:
    return uuid4().hex
