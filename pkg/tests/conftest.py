import itertools

from touchard import canonicalize_type, enumerate_walks, walk_text

LETTERS = "abcde"


def all_type_strings(max_dims: int = 3) -> list:
    """Every canonical type string with 1..max_dims dimensions."""
    out = []
    for size in range(1, max_dims + 1):
        out.extend(
            "".join(combo)
            for combo in itertools.combinations_with_replacement(LETTERS, size)
        )
    return out


def brute_token_strings(letters: str, n: int) -> list:
    """Valid walks of a type as token strings, via the enumeration oracle."""
    walk_type = canonicalize_type(letters)
    return [walk_text(walk, walk_type) for walk in enumerate_walks(walk_type, n)]
