"""Pattern avoidance in alternating words.

Patterns use dash syntax: letters in one block must be adjacent, so "1-32"
requires the 3 and 2 to sit next to each other and "1-2-3" is classical.
Words are lists of letters from 1..k. Counts come back as Python ints.
"""

from ._core import (
    a_even,
    a_odd,
    all_patterns,
    alternating_words,
    avoiders,
    avoids,
    b_even,
    b_odd,
    binomial,
    catalan,
    class_members,
    class_to_dyck,
    class_word_count,
    count_1_23_odd,
    count_3_21,
    count_avoiders,
    count_occurrences,
    cut_pairs,
    dyck_to_class,
    enumerate_classes,
    gf_coefficients,
    is_alternating,
    m_count,
    n123_even,
    narayana,
    predicted_count,
    stirling2,
    table,
    table_text,
    valleys,
    verify,
    wilf_class,
    wilf_partition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
