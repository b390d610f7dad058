import logging
from typing import Iterable
from typing import List
from typing import Optional
from typing import Type

from tok.tensororbits.errors import TensorFormatError
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.tensor.tensors import Tensor
from tok.tensororbits.tensor.tensors import tensor_type_for_size

log = logging.getLogger(__name__)

COMMENT_PREFIX = "#"


def format_tensor(a: Tensor) -> str:
    """One line `q=<q>; a=<entries>`, entries in lexicographic (i, j, k) order"""
    return f"q={a.field.q}; a={','.join(str(x) for x in a.a)}"


def format_header(field: FieldSpec) -> str:
    return f"{COMMENT_PREFIX} {field.header()}"


def parse_tensor_line(line: str, expected_type: Optional[Type[Tensor]] = None) -> Tensor:
    """
    Parse a tensor text line.  The shape is taken from the number of entries unless expected_type is given.  A
    `modulus=` field is accepted and must match the modulus this package uses for q.
    """
    fields = {}
    for part in line.strip().split(";"):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise TensorFormatError(f'Malformed field "{part}" in tensor line "{line.strip()}"')
        fields[key.strip()] = value.strip()

    for required in ("q", "a"):
        if required not in fields:
            raise TensorFormatError(f'Tensor line is missing "{required}=": "{line.strip()}"')

    try:
        field = field_for_order(int(fields["q"]))
    except ValueError as err:
        raise TensorFormatError(f'Unsupported field order in "{line.strip()}": {err}')

    modulus = fields.get("modulus")
    if modulus is not None and modulus.replace(" ", "") != field.modulus_str():
        raise TensorFormatError(f"Modulus {modulus} does not match {field.modulus_str()} used for q={field.q}")

    try:
        entries = [int(x) for x in fields["a"].split(",")]
    except ValueError:
        raise TensorFormatError(f'Entries must be comma-separated integers (got "{fields["a"]}")')

    try:
        tensor_type = expected_type or tensor_type_for_size(len(entries))
        return tensor_type.from_entries(field, entries)
    except ValueError as err:
        raise TensorFormatError(str(err))


def parse_tensor_lines(lines: Iterable[str], expected_type: Optional[Type[Tensor]] = None) -> List[Tensor]:
    """Parse every tensor line, skipping blank lines and `#` header/comment lines"""
    tensors = []
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        tensors.append(parse_tensor_line(stripped, expected_type))
    log.debug(f"Parsed {len(tensors)} tensors")
    return tensors
