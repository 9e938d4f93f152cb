import pstats
from pstats import SortKey
import sys

N_ROWS: int = 30

if __name__ == "__main__":
    path = sys.argv[1] if len(sys.argv) > 1 else "prof.out"
    p = pstats.Stats(path)
    p.strip_dirs().sort_stats(SortKey.CUMULATIVE).print_stats(N_ROWS)
