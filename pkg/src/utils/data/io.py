"""
Leitura e escrita dos formatos de arquivo: pontos (CSV), arestas (CSV) e densidade (JSON).
"""

import json
from pathlib import Path

import numpy as np
import pandas as pd

from utils.core.errors import FormatError, InvalidParameterError
from utils.config.constants import EDGE_COLUMNS, FLOAT_FORMAT, LINE_TERMINATOR, point_columns
from utils.config.logging import get_logger
from utils.data.density import DensitySpec
from utils.data.points import PointSet

logger = get_logger("IO")


def _ensure_parent(path):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise InvalidParameterError(f"Não foi possível criar o diretório de {path}: {e}") from e
    return path


def write_frame(df, path):
    """Grava um DataFrame em CSV com '.' decimal, LF e floats com ida e volta exata."""
    path = _ensure_parent(path)
    try:
        df.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator=LINE_TERMINATOR)
    except OSError as e:
        raise InvalidParameterError(f"Não foi possível escrever {path}: {e}") from e
    logger.info(f"Arquivo salvo em: {path}")
    return path


def _read_csv(path, expected_columns=None):
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except FileNotFoundError as e:
        raise InvalidParameterError(f"Arquivo não encontrado: {path}") from e
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise FormatError(f"CSV malformado em {path}: {e}") from e

    columns = [str(c).strip() for c in df.columns]
    if expected_columns is not None and columns != list(expected_columns):
        raise FormatError(f"Cabeçalho inesperado em {path}: {columns} (esperado {list(expected_columns)})")
    if df.empty:
        raise FormatError(f"CSV sem linhas de dados: {path}")
    df.columns = columns
    return df


def _to_float(df, path):
    try:
        values = df.apply(lambda col: pd.to_numeric(col.str.strip(), errors='raise')).to_numpy(dtype=float)
    except (ValueError, TypeError) as e:
        raise FormatError(f"Valor não numérico em {path}: {e}") from e
    if not np.all(np.isfinite(values)):
        raise FormatError(f"Valores não finitos em {path}")
    return values


def write_points(ps, path):
    """Grava os pontos com cabeçalho x1..xd, uma linha por ponto na ordem de chegada."""
    df = pd.DataFrame(np.asarray(ps.coords), columns=point_columns(ps.d))
    return write_frame(df, path)


def read_points(path):
    """Lê um CSV de pontos; o cabeçalho deve ser exatamente x1..xd."""
    df = _read_csv(path)
    d = len(df.columns)
    if d < 1 or list(df.columns) != point_columns(d):
        raise FormatError(f"Cabeçalho de pontos inválido em {path}: {list(df.columns)}")
    coords = _to_float(df, path)
    logger.info(f"{coords.shape[0]} ponto(s) em d = {d} lidos de {path}")
    return PointSet(coords)


def edges_frame(graph):
    """DataFrame src,dst,length de um grafo (índices começando em 0)."""
    return pd.DataFrame({
        'src': np.asarray(graph.src, dtype=np.int64),
        'dst': np.asarray(graph.dst, dtype=np.int64),
        'length': np.asarray(graph.length, dtype=float),
    }, columns=EDGE_COLUMNS)


def write_edges(graph, path):
    return write_frame(edges_frame(graph), path)


def read_edges(path):
    """
    Lê um CSV de arestas.

    Returns:
        tuple: (src, dst, length) como arrays numpy
    """
    df = _read_csv(path, EDGE_COLUMNS)
    values = _to_float(df, path)
    src, dst, length = values[:, 0], values[:, 1], values[:, 2]
    if np.any(src != np.round(src)) or np.any(dst != np.round(dst)) or np.any(src < 0) or np.any(dst < 0):
        raise FormatError(f"Índices de aresta devem ser inteiros não negativos em {path}")
    if np.any(length < 0):
        raise FormatError(f"Comprimentos de aresta negativos em {path}")
    return src.astype(np.int64), dst.astype(np.int64), length


def parse_density(payload):
    """Constrói um DensitySpec a partir de {"boxes": [{"lo": [...], "hi": [...], "f": v}, ...]}."""
    if not isinstance(payload, dict) or not isinstance(payload.get('boxes'), list):
        raise FormatError("Densidade deve ser um objeto JSON com a lista 'boxes'")
    boxes = []
    for item in payload['boxes']:
        if not isinstance(item, dict) or set(item) != {'lo', 'hi', 'f'}:
            raise FormatError(f"Caixa malformada: {item!r}")
        if not isinstance(item['lo'], list) or not isinstance(item['hi'], list):
            raise FormatError(f"Extremos da caixa devem ser listas: {item!r}")
        if isinstance(item['f'], bool) or not isinstance(item['f'], (int, float)):
            raise FormatError(f"Valor f da caixa deve ser numérico: {item!r}")
        boxes.append(item)
    try:
        return DensitySpec.piecewise(boxes)
    except (TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(f"Densidade inválida: {e}") from e


def read_density(source):
    """Densidade a partir de 'uniform' ou do caminho de um arquivo JSON."""
    if source is None or str(source) == 'uniform':
        return DensitySpec.uniform()
    try:
        with open(source, encoding='utf-8') as f:
            payload = json.load(f)
    except FileNotFoundError as e:
        raise InvalidParameterError(f"Arquivo de densidade não encontrado: {source}") from e
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise FormatError(f"JSON de densidade malformado em {source}: {e}") from e
    density = parse_density(payload)
    logger.info(f"Densidade por partes com {len(density.boxes)} caixa(s) lida de {source}")
    return density


def json_safe(value):
    """Converte NaN/inf em None e tipos numpy em tipos nativos, recursivamente."""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not np.isfinite(value):
        return None
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    if isinstance(value, Path):
        return str(value)
    return value


def write_json(payload, path):
    """Grava JSON UTF-8 (NaN vira null)."""
    path = _ensure_parent(path)
    try:
        with open(path, 'w', encoding='utf-8', newline=LINE_TERMINATOR) as f:
            json.dump(json_safe(payload), f, indent=2, allow_nan=False)
            f.write(LINE_TERMINATOR)
    except OSError as e:
        raise InvalidParameterError(f"Não foi possível escrever {path}: {e}") from e
    logger.info(f"Arquivo salvo em: {path}")
    return path
