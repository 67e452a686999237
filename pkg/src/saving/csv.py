import csv
import io
from collections.abc import Iterable, Sequence

from .util import ArtifactWriter, ArtifactWriterConfig


class CsvArtifactWriterConfig(ArtifactWriterConfig):
    type: str = "csv"

    columns: list[str]


class CsvArtifactWriter(ArtifactWriter):
    save_name_template: str = "{name}.csv"
    columns: list[str]

    def __init__(self, columns: Sequence[str], **kwargs) -> None:
        if len(columns) == 0:
            raise ValueError("a CSV artifact needs at least one column")

        super().__init__(**kwargs)
        self.columns = list(columns)

    def render(self, payload: Iterable[Sequence]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in payload:
            if len(row) != len(self.columns):
                raise ValueError(
                    f"row has {len(row)} values, expected {len(self.columns)}"
                )
            writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
        return buffer.getvalue()
