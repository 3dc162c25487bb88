"""Regenerate the bundled JSON group files from the fixture builders."""

from pathlib import Path

from spinal.fixtures import SHIPPED
from spinal.groupfile import dump_group

DATA = Path(__file__).resolve().parent.parent / "src" / "spinal" / "data"


def main() -> None:
    DATA.mkdir(exist_ok=True)
    for name, build in SHIPPED.items():
        dump_group(build(), DATA / f"{name}.json")
        print(f"wrote {name}.json")


if __name__ == "__main__":
    main()
