"""
The command line, driven from Python
====================================

Everything the library does is reachable through the ``momentangle``
executable.  This script replays a shell session by calling the CLI entry
point directly, printing each command before running it.
"""

import sys

from momentangle.cli import main


def run(*argv):
    print(f"$ momentangle {' '.join(argv)}")
    sys.stdout.flush()  # keep the prompt ahead of unbuffered stderr
    code = main(list(argv))
    print(f"(exit code {code})")
    print()


# Constructors nest as little prefix expressions.
run("build", "polygon", "5")
run("build", "cut-vertex", "(", "simplex", "2", ")", "0")

# Graded cohomology in three output shapes.
run("betti", "polygon", "4")
run("betti", "polygon", "4", "--csv")
run("betti", "simplex", "3", "--json")

# Verify one cut, or every vertex at once.
run("verify", "simplex", "2", "0")
run("verify", "polygon", "5", "--all-vertices")

# The standard verification family; exit code 1 would flag a mismatch.
run("verify-corpus", "--csv")

# Floating-point checks for the torus embedding and its flattening.
run("isotopy-check", "2", "2000", "42")

# Errors use exit code 2, resource limits exit code 3.
run("betti", "frobnicate")
run("betti", "polygon", "8", "--max-subsets", "4")
