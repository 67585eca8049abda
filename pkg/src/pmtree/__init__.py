"""Context trees over finite alphabets, perfect memory, and SCOT Markov chains."""
from .errors import *  # noqa: F401,F403
from .families import comb, minimal_full_mc, sparse_example, wide_r2
from .lattice import (
    contained_at_root,
    covers_at_root,
    intersection_all,
    intersection_at_root,
    union_all,
    union_at_root,
)
from .pm import (
    PmWitness,
    TreeMetrics,
    Verdict,
    closure,
    closure_oracle,
    closure_trim,
    is_perfect_memory,
    is_pm_cor1,
    is_pm_cor2,
    is_pm_def4,
    is_pm_thm2,
    metrics,
    pm_chain,
)
from .scot import MarkovChain, Scot, build_markov, from_full_mc, next_context, simulate, stationary
from .tree import (
    BINARY,
    Alphabet,
    ContextTree,
    all_subtrees,
    complete_hull,
    count_complete_trees,
    counts,
    from_contexts,
    is_complete,
    is_postfix,
    parent_tree,
    saturate,
    subtree,
)

__version__ = "0.1.0"
