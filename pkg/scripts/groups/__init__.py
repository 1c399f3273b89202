# Text syntax for words: whitespace separated tokens, inverse letters carry a suffix
INVERSE_SUFFIX = "^-1"
IDENTITY_TOKEN = "1"

# Characters a generator name may not contain
RESERVED_CHARACTERS = frozenset(" \t\n^;,:")
