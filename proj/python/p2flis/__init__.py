"""Penrose P2 tilings and their fully leafed induced subtrees."""

try:
    from . import _p2flis as _core
except ImportError:  # in-tree build: the extension sits next to the package
    import _p2flis as _core

Error = _core.Error
Patch = _core.Patch
Tiling = _core.Tiling
LeafRecord = _core.LeafRecord
leaf_function = _core.leaf_function
is_saturated = _core.is_saturated
generate = _core.generate
search_max_leaves = _core.search_max_leaves
prime_census = _core.prime_census
chain_report = _core.chain_report
sea_caterpillars = _core.sea_caterpillars
forbidden_patterns = _core.forbidden_patterns
render_svg = _core.render_svg

__all__ = [
    "Error",
    "LeafRecord",
    "Patch",
    "Tiling",
    "chain_report",
    "forbidden_patterns",
    "generate",
    "is_saturated",
    "leaf_function",
    "prime_census",
    "render_svg",
    "sea_caterpillars",
    "search_max_leaves",
]
