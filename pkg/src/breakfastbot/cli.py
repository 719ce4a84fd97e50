"""Command-line front door.

State lives in one JSON file under the data directory (default from
BREAKFASTBOT_DATA_DIR, falling back to ./breakfastbot-data). Exit codes:
0 success, 1 domain error, 2 usage error.
"""

import json
import sys
from pathlib import Path

import click

from . import creativity, kitchen, memory as memory_mod, rules as rules_mod
from .conceptspace import ObjectClass
from .errors import BreakfastError
from .household import (
    DEFAULT_STM_DAYS,
    STATE_FILENAME,
    HouseholdState,
    ensure_unlocked,
)
from .kitchen import ServeRequest
from .service import DEFAULT_PORT

ENV_DATA_DIR = "BREAKFASTBOT_DATA_DIR"


class Session:
    def __init__(self, data_dir: Path, as_json: bool):
        self.data_dir = data_dir
        self.as_json = as_json

    @property
    def state_path(self) -> Path:
        return self.data_dir / STATE_FILENAME

    def load(self) -> HouseholdState:
        ensure_unlocked(self.state_path)
        if not self.state_path.exists():
            raise click.UsageError(
                f"no household at {self.state_path}; run 'breakfastbot init' first"
            )
        return HouseholdState.load(self.state_path)

    def save(self, state: HouseholdState) -> None:
        state.save(self.state_path)

    def emit(self, payload: dict, text_lines) -> None:
        if self.as_json:
            click.echo(json.dumps(payload, indent=2))
        else:
            for line in text_lines:
                click.echo(line)


pass_session = click.make_pass_decorator(Session)


@click.group()
@click.option(
    "--data-dir",
    type=click.Path(path_type=Path),
    envvar=ENV_DATA_DIR,
    default=Path("breakfastbot-data"),
    show_default=True,
    help="Directory holding the household state file.",
)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_context
def main(ctx, data_dir: Path, as_json: bool):
    """Teach, serve, and invent breakfast setups for one household."""
    ctx.obj = Session(data_dir, as_json)


@main.command()
@click.option("--stm-days", type=click.IntRange(min=1), default=DEFAULT_STM_DAYS,
              show_default=True, help="Sliding window length in days.")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True,
              help="Seed for the household's random source.")
@pass_session
def init(session: Session, stm_days: int, seed: int):
    """Create a fresh household."""
    if session.state_path.exists():
        raise click.UsageError(f"household already exists at {session.state_path}")
    session.data_dir.mkdir(parents=True, exist_ok=True)
    state = HouseholdState(stm_days=stm_days, seed=seed)
    session.save(state)
    session.emit(
        {"state_file": str(session.state_path), "stm_days": stm_days, "seed": seed},
        [f"created household at {session.state_path} (window {stm_days} days, seed {seed})"],
    )


@main.group(name="object")
def object_group():
    """Manage the object catalog."""


@object_group.command("add")
@click.argument("name")
@click.option("--class", "object_class", type=click.Choice(["food", "utensil"]),
              required=True)
@click.option("--graspable/--not-graspable", default=True, show_default=True,
              help="Whether the robot can fetch this object itself.")
@pass_session
def object_add(session: Session, name: str, object_class: str, graspable: bool):
    """Register a new object."""
    state = session.load()
    object_id = state.catalog.add(name, ObjectClass(object_class), graspable)
    session.save(state)
    session.emit(
        {"id": object_id, "name": name, "class": object_class, "graspable": graspable},
        [f"added {object_class} {name!r} with id {object_id}"],
    )


@main.command()
@click.argument("name")
@click.option("--objects", required=True,
              help="Comma-separated object names making up the setup.")
@pass_session
def teach(session: Session, name: str, objects: str):
    """Teach a named breakfast setup."""
    state = session.load()
    object_names = [part.strip() for part in objects.split(",") if part.strip()]
    entry = memory_mod.teach(state, name, object_names)
    session.save(state)
    decoded = ", ".join(
        sorted_names(entry, state)
    )
    session.emit(
        {"id": entry.id, "name": entry.name, "objects": sorted_names(entry, state),
         "taught_on_day": entry.taught_on_day},
        [f"taught breakfast {entry.name!r} (id {entry.id}): {decoded}"],
    )


def sorted_names(entry, state) -> list[str]:
    from .conceptspace import decode

    return decode(entry.lv.padded(len(state.catalog)), state.catalog)


@main.command()
@click.option("--name", default=None, help="Serve this taught breakfast.")
@click.option("--least-eaten", "least", is_flag=True,
              help="Serve the option eaten least in the window.")
@click.option("--surprise", is_flag=True, help="Create and serve a new option.")
@pass_session
def serve(session: Session, name, least: bool, surprise: bool):
    """Serve a breakfast and print the fetch plan."""
    picked = sum([name is not None, least, surprise])
    if picked != 1:
        raise click.UsageError("choose exactly one of --name, --least-eaten, --surprise")
    if name is not None:
        request = ServeRequest.by_name(name)
    elif least:
        request = ServeRequest.least_eaten()
    else:
        request = ServeRequest.surprise()
    state = session.load()
    plan = kitchen.serve(state, request, state.rng)
    session.save(state)
    label = plan.entry_name if plan.source == "episodic" else "surprise"
    session.emit(
        {
            "source": plan.source,
            "entry_id": plan.entry_id,
            "entry_name": plan.entry_name,
            "objects": [{"name": n, "graspable": g} for n, g in plan.objects],
            "robot_fetches": list(plan.robot_fetches),
            "user_fetches": list(plan.user_fetches),
            "day": plan.day,
        },
        [
            f"day {plan.day}: serving {label}",
            "robot fetches: " + (", ".join(plan.robot_fetches) or "(nothing)"),
            "you fetch: " + (", ".join(plan.user_fetches) or "(nothing)"),
        ],
    )


@main.group(name="day")
def day_group():
    """Day counter controls."""


@day_group.command("advance")
@pass_session
def day_advance(session: Session):
    """Move to the next day, evicting stale window records."""
    state = session.load()
    new_day = memory_mod.advance_day(state)
    session.save(state)
    session.emit({"day": new_day}, [f"now on day {new_day}"])


@main.command()
@pass_session
def rules(session: Session):
    """Print the inferred dependency rules."""
    state = session.load()
    kg = state.knowledge_graph()
    text = rules_mod.dump(kg, state.catalog)
    if session.as_json:
        click.echo(json.dumps({"dump": text}, indent=2))
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--n", type=click.IntRange(min=0), required=True,
              help="Number of raw generations.")
@click.option("--report", type=click.Path(path_type=Path), default=None,
              help="Also write the JSON report to this file.")
@pass_session
def simulate(session: Session, n: int, report):
    """Run a generation batch and print its accounting."""
    state = session.load()
    stats = creativity.simulate_batch(state, state.rng, n)
    session.save(state)
    payload = stats.to_report(state.catalog)
    if report is not None:
        report.write_text(json.dumps(payload, indent=2) + "\n")
    lines = [
        f"requested: {payload['requested']}",
        f"same as memory: {payload['same_as_memory']}",
        f"invalid before fix: {payload['invalid_before_fix']}",
        f"duplicate new: {payload['duplicate_new']}",
        f"distinct new: {payload['distinct_new']}",
    ] + [f"output: {', '.join(names)}" for names in payload["outputs"]]
    session.emit(payload, lines)


@main.command("serve-http")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=DEFAULT_PORT, show_default=True)
@click.option("--stm-days", type=click.IntRange(min=1), default=DEFAULT_STM_DAYS,
              show_default=True, help="Window length when creating a new household.")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True,
              help="Seed when creating a new household.")
@click.option("--cors-origin", multiple=True,
              help="Allowed web origins (default: all).")
@pass_session
def serve_http(session: Session, host: str, port: int, stm_days: int, seed: int,
               cors_origin):
    """Run the HTTP service over this household."""
    from . import service

    ensure_unlocked(session.state_path)
    session.data_dir.mkdir(parents=True, exist_ok=True)
    service.run(
        session.state_path,
        host=host,
        port=port,
        stm_days=stm_days,
        seed=seed,
        cors_origins=list(cors_origin) or None,
    )


def entrypoint(argv=None) -> int:
    try:
        main.main(args=argv, standalone_mode=False)
        return 0
    except BreakfastError as exc:
        click.echo(f"{exc.code}: {exc}", err=True)
        return 1
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 2
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        return 2


if __name__ == "__main__":
    sys.exit(entrypoint())
