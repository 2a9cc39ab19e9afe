"""
Constantes globais do projeto para evitar duplicação de código.
"""

import os

# Logging
LOGGER_NAME = 'nnlln'
LOG_LEVEL = os.environ.get('NNLLN_LOG_LEVEL', 'INFO').upper()

# Paralelismo: NNLLN_THREADS é o padrão de --threads
THREADS_ENV_VAR = 'NNLLN_THREADS'


def default_threads():
    """Número de workers padrão (variável de ambiente ou 1)."""
    raw = os.environ.get(THREADS_ENV_VAR, '').strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(value, 1)


# Formatos de arquivo (sempre '.' como separador decimal e LF)
FLOAT_FORMAT = '%.17g'
LINE_TERMINATOR = '\n'
EDGE_COLUMNS = ['src', 'dst', 'length']
REPORT_COLUMNS = [
    'family', 'd', 'alpha', 'n', 'trials', 'mean', 'stdev', 'stderr',
    'target', 'abs_dev', 'l1', 'l2'
]


def point_columns(d):
    """Cabeçalho do CSV de pontos: x1,...,xd."""
    return [f'x{i + 1}' for i in range(d)]


# Tolerâncias de validação de densidades
DENSITY_VOLUME_TOL = 1e-12
DENSITY_MASS_TOL = 1e-9

# Índice espacial
KDTREE_LEAF_SIZE = 40
QUERY_BATCH_SIZE = 4096
# Tamanho inicial da lista de vizinhos nas buscas com expansão
INITIAL_NEIGHBOURS = 8
# Tamanho inicial da lista de candidatos do grafo de Gabriel por dimensão
GABRIEL_NEIGHBOURS = {1: 4, 2: 16, 3: 32}
GABRIEL_NEIGHBOURS_DEFAULT = 48
# Subdivisões por aresta de face do cubo usadas no certificado de direções
GABRIEL_PATCHES_PER_FACE = {1: 1, 2: 8, 3: 4}
GABRIEL_PATCHES_PER_FACE_DEFAULT = 2
# Chegadas até esta posição varrem o prefixo inteiro no ONG
ONLINE_PREFIX_SCAN = 256
# Consultas por lote no grafo de Gabriel (o tensor de produtos internos é lote x K x K)
GABRIEL_BATCH_SIZE = 1024
# Acima deste tamanho de lista os pontos sem certificado passam à varredura direta
GABRIEL_MAX_NEIGHBOURS = 256
# Busca dirigida: acima deste tamanho de lista as consultas restantes varrem todos os pontos
DIRECTED_SCAN_NEIGHBOURS = 256
