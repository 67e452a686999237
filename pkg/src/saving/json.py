import json
import math

from pydantic import BaseModel

from .util import ArtifactWriter, ArtifactWriterConfig


class JsonArtifactWriterConfig(ArtifactWriterConfig):
    type: str = "json"


def _plain(value):
    # non-finite floats become strings so the output stays strict JSON
    if isinstance(value, BaseModel):
        return _plain(value.model_dump())
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


class JsonArtifactWriter(ArtifactWriter):
    save_name_template: str = "{name}.json"

    def render(self, payload: dict | BaseModel) -> str:
        # float repr is the shortest round-trip form
        return json.dumps(_plain(payload), sort_keys=True, indent=2) + "\n"
