import os
from abc import ABC

from tok.tensororbits.utils.misc import parse_boolean_env_var


class OracleRuntimeConstants(ABC):
    # upper bound on visited-set and frontier allocations, further clamped to the memory psutil reports as available
    memory_cap_mb: int = int(os.environ.get("TOK_MEMORY_CAP_MB", 1024))

    # tensors, or first contraction spaces for 2x3x3 censuses, per census work unit.  Smaller units balance
    # worker shards better at the cost of overhead
    census_chunk_size: int = int(os.environ.get("TOK_CENSUS_CHUNK_SIZE", 65536))

    # frontier states expanded per vectorised batch.  Decrease to reduce peak memory demand - increases runtime
    bfs_frontier_chunk_size: int = int(os.environ.get("TOK_BFS_FRONTIER_CHUNK_SIZE", 1_000_000))

    # Expects a value like "true" or "1".  Enables the full-size acceptance tests, including the q=3 census
    run_slow_tests: bool = parse_boolean_env_var("TOK_RUN_SLOW_TESTS")
