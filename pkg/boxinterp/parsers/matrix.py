from typing import Any, BinaryIO, List, Mapping, NamedTuple, Optional

from ..models.grid_function import GridFunction
from ..models.vector_list import VectorList
from ..utils import codec


class Problem(NamedTuple):
    x: VectorList
    values: Optional[GridFunction]


def _integer(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(
            'vector entries must be integers, got {!r}'.format(value))
    return value


def parse_vector_list(payload: Mapping[str, Any]) -> VectorList:
    """{"dim": d, "vectors": [[...], ...]}

    `dim` may be omitted when there is at least one vector.
    """
    if not isinstance(payload, Mapping):
        raise ValueError('a vector list must be a JSON object')
    vectors: List[List[int]] = [
        [_integer(v) for v in vec] for vec in payload['vectors']
    ]
    dim: int
    if 'dim' in payload:
        dim = _integer(payload['dim'])
    elif vectors:
        dim = len(vectors[0])
    else:
        raise ValueError('"dim" is required for an empty vector list')
    return VectorList(dim, vectors)


def load(fp: BinaryIO) -> Problem:
    """Either a vector list document or a values file

    A values file is {"matrix": <vector list>, "values": [...]}.
    """
    data: Any = codec.loads(fp.read())
    if not isinstance(data, Mapping):
        raise ValueError('input must be a JSON object')
    if 'matrix' in data:
        x: VectorList = parse_vector_list(data['matrix'])
        return Problem(
            x, GridFunction.from_list(data.get('values', []), x.dim))
    return Problem(parse_vector_list(data), None)
