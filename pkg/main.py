import logging

from rich.console import Console
from rich.logging import RichHandler
import typer

from lipaths.router import routes
from lipaths.utils.settings import LOG_FORMAT, LOG_LEVEL


app = routes
app.info.name = "lipaths"
app.info.help = "Long induced paths in ordered graphs: constellations, peel, bounds and the G_ell construction."


def configure_logging(level: str) -> None:
    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=[handler], force=True)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Logs em DEBUG no stderr"),
) -> None:
    configure_logging("DEBUG" if verbose else LOG_LEVEL)


if __name__ == "__main__":
    app()
