from .util import ArtifactWriter, ArtifactWriterConfig, atomic_write_text
from .json import JsonArtifactWriter, JsonArtifactWriterConfig
from .csv import CsvArtifactWriter, CsvArtifactWriterConfig

ArtifactWriterConfigAlias = JsonArtifactWriterConfig | CsvArtifactWriterConfig


def get_artifact_writer(config: ArtifactWriterConfig, **kwargs) -> ArtifactWriter:
    if isinstance(config, CsvArtifactWriterConfig):
        return CsvArtifactWriter.from_config(config, **kwargs)
    if isinstance(config, JsonArtifactWriterConfig):
        return JsonArtifactWriter.from_config(config, **kwargs)

    raise ValueError(f"Unknown artifact config: {config}")
