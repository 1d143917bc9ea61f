from __future__ import annotations

import sys

import agentyper as typer

from .. import __version__
from ..convention import default_convention
from . import common
from .classify import command as classify_command
from .diagram import command as diagram_command
from .equiv import command as equiv_command
from .family import command as family_command
from .invariant import command as invariant_command
from .km import command as km_command
from .surgery import command as surgery_command
from .verify import command as verify_command

app = typer.Agentyper(
    name="twobridge",
    version=f"{__version__} (convention: {default_convention().value})",
    help="Two-bridge knot calculus and formal Seiberg-Witten surgery bookkeeping",
)


@app.callback()
def root(
    ctx: typer.Context,
) -> None:
    del ctx
    common.configure_state(verbosity=common.explicit_verbosity())


app.command(name="classify")(classify_command)
app.command(name="equiv")(equiv_command)
app.command(name="invariant")(invariant_command)
app.command(name="diagram")(diagram_command)
app.command(name="family")(family_command)
app.command(name="verify")(verify_command)
app.command(name="surgery")(surgery_command)
app.command(name="km")(km_command)


def main(args: list[str] | None = None) -> None:
    old_argv = sys.argv
    sys.argv = ["twobridge", *(args or old_argv[1:])]
    try:
        app(args=args)
    finally:
        sys.argv = old_argv


if __name__ == "__main__":
    main()
