"""
Algorithms package: the proof kernel and its sampler, maximum antichain search,
the covering theory pipeline and the frame checks.
"""
