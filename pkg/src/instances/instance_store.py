"""
Instance files on disk: the plain-text graph plus an optional JSON sidecar
(`<name>.meta.json`) describing the bundle it came from.
"""

import json
import logging
import os
import shutil
from typing import Optional

from graph_core.instance_format import format_instance_text, parse_instance_text
from graph_core.labeled_graph import LabeledGraph
from exceptions import ParseError
from instances.bundle import InstanceBundle

logger = logging.getLogger(__name__)

SIDECAR_SUFFIX = '.meta.json'


def sidecar_path(path: str) -> str:
    root, _ = os.path.splitext(path)
    return root + SIDECAR_SUFFIX


def _atomic_write(path: str, text: str) -> None:
    """Write to a temp file, then rename over the target."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    temp_path = f"{path}.tmp"
    try:
        with open(temp_path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        shutil.move(temp_path, path)
    except Exception:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise


def load_instance(path: str) -> LabeledGraph:
    """
    Read a graph from an instance file.

    Raises:
        OSError: If the file cannot be read
        ParseError: With the offending line number and the file path
    """
    with open(path, 'rb') as f:
        raw = f.read()
    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError as e:
        line_number = raw.count(b'\n', 0, e.start) + 1
        raise ParseError("not valid UTF-8 text", line_number, path) from e
    try:
        return parse_instance_text(text)
    except ParseError as e:
        raise ParseError(e.detail, e.line_number, path) from e


def save_instance(g: LabeledGraph, path: str) -> None:
    """Write g in canonical form (edges sorted by (u, v))."""
    _atomic_write(path, format_instance_text(g))
    logger.debug("Saved %r to %s", g, path)


def save_bundle(bundle: InstanceBundle, path: str) -> str:
    """Save the graph and its sidecar; returns the sidecar path."""
    save_instance(bundle.graph, path)
    meta_path = sidecar_path(path)
    _atomic_write(meta_path, json.dumps(bundle.sidecar(), indent=2, sort_keys=True) + '\n')
    return meta_path


def load_bundle(path: str) -> Optional[InstanceBundle]:
    """
    Load an instance together with its sidecar.

    Returns:
        The bundle, or None when the instance has no sidecar

    Raises:
        ParseError: If the sidecar is not valid bundle metadata
    """
    graph = load_instance(path)
    meta_path = sidecar_path(path)
    if not os.path.exists(meta_path):
        return None
    try:
        with open(meta_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, meta_path) from e
    except UnicodeDecodeError as e:
        raise ParseError("not valid UTF-8 text", None, meta_path) from e
    try:
        return InstanceBundle.from_sidecar(graph, data)
    except ParseError as e:
        raise ParseError(e.detail, None, meta_path) from e
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed bundle metadata: {e!r}", None, meta_path) from e
