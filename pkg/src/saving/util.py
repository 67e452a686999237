import os
import tempfile
from abc import ABC, abstractmethod
from pathlib import Path

from pydantic import BaseModel


class ArtifactWriterConfig(BaseModel):
    type: str

    name: str
    save_dir: str | Path
    save_name_template: str | None = None


def atomic_write_text(path: Path, text: str) -> Path:
    """Write through a temporary file in the same directory, then rename over the target."""
    if (parent_dir := path.parent) and not parent_dir.exists():
        parent_dir.mkdir(parents=True)

    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as f:
            f.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise

    return path


class ArtifactWriter(ABC):
    """
    Renders one payload to text and writes it to save_dir / save_name_template.
    The template sees the writer name and any keyword passed to `save`.
    """

    save_name_template: str = "{name}"

    def __init__(
        self,
        name: str,
        save_dir: str | Path,
        save_name_template: str | None = None,
    ) -> None:
        if not name:
            raise ValueError("artifact name must not be empty")

        self.name = name
        self.save_dir = Path(save_dir)
        if save_name_template is not None:
            self.save_name_template = save_name_template

    @classmethod
    def from_config(cls, config: ArtifactWriterConfig, **kwargs) -> "ArtifactWriter":
        return cls(**config.model_dump(exclude={"type"}), **kwargs)

    def path_for(self, **fields) -> Path:
        return self.save_dir / self.save_name_template.format(name=self.name, **fields)

    @abstractmethod
    def render(self, payload) -> str:
        pass

    def save(self, payload, **fields) -> Path:
        return atomic_write_text(self.path_for(**fields), self.render(payload))
