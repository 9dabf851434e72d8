import re
from typing import Optional, Union

from ..graph.core import Graph, decode_text

_EXPECTED = re.compile(r"^#\s*expected:\s*(yes|no)\s*$", re.IGNORECASE)


def format_edge_list(g: Graph, expected: Optional[bool] = None) -> str:
    """Edge-list text, optionally headed by the "# expected: yes|no" sidecar line"""
    lines = []
    if expected is not None:
        lines.append(f"# expected: {'yes' if expected else 'no'}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def read_expected(text: Union[str, bytes]) -> Optional[bool]:
    """Ground truth recorded in a corpus file, if any"""
    for line in decode_text(text).splitlines():
        match = _EXPECTED.match(line.strip())
        if match:
            return match.group(1).lower() == "yes"
    return None
