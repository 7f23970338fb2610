import typer

from lipaths.bounds.controller import router as bounds_router
from lipaths.constellation.controller import router as constellation_router
from lipaths.lowerbound.controller import router as lowerbound_router
from lipaths.ordered.controller import router as ordered_router
from lipaths.peel.controller import router as peel_router

routes = typer.Typer(no_args_is_help=True)

# os comandos ficam no nível de cima: `lipaths peel`, não `lipaths peel peel`
for sub in (ordered_router, constellation_router, bounds_router, peel_router, lowerbound_router):
    routes.registered_commands.extend(sub.registered_commands)
