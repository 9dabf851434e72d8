import asyncio
import json
import logging
from functools import partial
from typing import Any, Callable, Dict, Optional

from mcp.server import Server
from mcp.server.models import InitializationOptions
import mcp.types as types
from mcp.server.stdio import stdio_server

from .config import get_config
from .decide.pipeline import is_cyclically_orientable
from .decide.procedures.manager import default_manager
from .graph.core import parse_edge_list, parse_orientation
from .oracle.corpus import format_edge_list
from .oracle.generators import gen_co_graph, gen_perturbed
from .orient.construct import find_cyclic_orientation
from .orient.verify import VerifyMode, verify_orientation
from .reports import CheckReport, OrientReport, VerifyReport
from .utils.log import configure_logging

logger = logging.getLogger(__name__)

config = get_config()
procedures = default_manager()

# Create MCP server
app = Server(config.SERVER_NAME)


async def _offload(fn: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
    """Run CPU-bound graph work off the event loop"""
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, partial(fn, *args, **kwargs))


def _check(edges: str, procedure: str) -> Dict[str, Any]:
    g = parse_edge_list(edges, strict=config.STRICT_EDGES)
    verdict = is_cyclically_orientable(g, procedure)
    return CheckReport.from_verdict(g, verdict).model_dump(by_alias=True)


def _orient(edges: str) -> Dict[str, Any]:
    g = parse_edge_list(edges, strict=config.STRICT_EDGES)
    verdict = is_cyclically_orientable(g)
    return OrientReport.build(verdict, find_cyclic_orientation(g, verdict)).model_dump(by_alias=True)


def _verify(edges: str, orientation: str) -> Dict[str, Any]:
    g = parse_edge_list(edges, strict=config.STRICT_EDGES)
    o = parse_orientation(orientation, g)
    verdict = is_cyclically_orientable(g)
    if verdict.answer:
        mode = VerifyMode.FROM_LOG
        report = verify_orientation(g, o, mode, verdict.logs)
    else:
        mode = VerifyMode.EXHAUSTIVE
        report = verify_orientation(g, o, mode, cap=config.CHORDLESS_CAP)
    return VerifyReport.build(report, mode.value, verdict.answer).model_dump(by_alias=True)


def _generate(seed: int, target_n: int, max_cycle_len: int, perturb: bool) -> Dict[str, Any]:
    g, _ = gen_co_graph(seed, target_n, max_cycle_len)
    expected: Optional[bool] = True
    if perturb:
        g = gen_perturbed(seed, g)
        expected = None
    return {"vertex_count": g.vertex_count, "edge_count": g.edge_count,
            "expected": expected, "edges": format_edge_list(g, expected)}


# Tool functions (for direct use in tests)
async def check_graph(edges: str, procedure: str = "linear") -> Dict[str, Any]:
    """Decide cyclic orientability of an edge-list graph."""
    report = await _offload(_check, edges, procedure)
    return {"status": "success", "data": report}


async def orient_graph(edges: str) -> Dict[str, Any]:
    """Construct a cyclic orientation, or report why none exists."""
    report = await _offload(_orient, edges)
    return {"status": "success", "data": report}


async def verify_graph_orientation(edges: str, orientation: str) -> Dict[str, Any]:
    """Check a directed edge list against the graph's chordless cycles."""
    report = await _offload(_verify, edges, orientation)
    return {"status": "success", "data": report}


async def generate_graph(seed: int, target_n: int, max_cycle_len: Optional[int] = None,
                         perturb: bool = False) -> Dict[str, Any]:
    """Generate a corpus graph by gluing cycles along edges."""
    data = await _offload(_generate, seed, target_n,
                          config.MAX_CYCLE_LEN if max_cycle_len is None else max_cycle_len,
                          perturb)
    data["metadata"] = {"version": config.VERSION, "seed": seed}
    return {"status": "success", "data": data}


_EDGES = {"type": "string", "description": "Edge list, one 'u v' pair per line"}


# Register MCP handlers
@app.list_tools()
async def handle_list_tools() -> list[types.Tool]:
    """List available tools"""
    return [
        types.Tool(
            name="check_graph",
            description="Decide whether a graph is cyclically orientable",
            inputSchema={
                "type": "object",
                "required": ["edges"],
                "properties": {
                    "edges": _EDGES,
                    "procedure": {
                        "type": "string",
                        "enum": procedures.names(),
                        "description": "Per-component procedure (default: linear)",
                        "default": "linear"
                    }
                }
            }
        ),
        types.Tool(
            name="orient_graph",
            description="Construct a cyclic orientation of a graph",
            inputSchema={
                "type": "object",
                "required": ["edges"],
                "properties": {"edges": _EDGES}
            }
        ),
        types.Tool(
            name="verify_orientation",
            description="Check that every chordless cycle is a directed cycle",
            inputSchema={
                "type": "object",
                "required": ["edges", "orientation"],
                "properties": {
                    "edges": _EDGES,
                    "orientation": {
                        "type": "string",
                        "description": "Directed edge list, 'u v' meaning u -> v"
                    }
                }
            }
        ),
        types.Tool(
            name="generate_graph",
            description="Generate a cyclically orientable graph from a seed",
            inputSchema={
                "type": "object",
                "required": ["seed", "target_n"],
                "properties": {
                    "seed": {"type": "integer"},
                    "target_n": {"type": "integer", "minimum": 3},
                    "max_cycle_len": {"type": "integer", "minimum": 3},
                    "perturb": {
                        "type": "boolean",
                        "description": "Add one random non-edge",
                        "default": False
                    }
                }
            }
        )
    ]


@app.call_tool()
async def handle_call_tool(name: str, arguments: dict) -> list[types.TextContent]:
    """Handle tool calls"""
    try:
        if name == "check_graph":
            result = await check_graph(**arguments)
        elif name == "orient_graph":
            result = await orient_graph(**arguments)
        elif name == "verify_orientation":
            result = await verify_graph_orientation(**arguments)
        elif name == "generate_graph":
            result = await generate_graph(**arguments)
        else:
            return [types.TextContent(type="text", text=f"Unknown tool: {name}")]

        return [types.TextContent(type="text", text=json.dumps(result, indent=2))]
    except Exception as e:
        logger.info("tool %s failed: %s", name, e)
        return [types.TextContent(type="text", text=json.dumps({
            "status": "error",
            "error": str(e)
        }, indent=2))]


async def main():
    """Run the MCP server"""
    configure_logging(config)
    async with stdio_server() as (read_stream, write_stream):
        init_options = InitializationOptions(
            server_name=config.SERVER_NAME,
            server_version=config.VERSION,
            capabilities={
                "tools": {}
            }
        )
        logger.info("serving %d procedures: %s", len(procedures.names()), procedures.names())
        await app.run(read_stream, write_stream, init_options)


def run():
    asyncio.run(main())


if __name__ == "__main__":
    run()
