# -*- coding: utf-8 -*-
import json
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, ValidationError, conint, field_validator, model_validator

from spec_system.exceptions import ConfigError

DEFAULT_CONFIG_NAME = 'dialog_config.json'


class DialogConfig(BaseModel):
    """
    Settings of one dialog session.

    :param lexicon_path: Lexicon file in the line format of the lexicon module.
    :param schemata_path: Paraphrase schema file.
    :param kb_path: Knowledge base file loaded at start-up, optional.
    :param depth_bound: Resolution depth bound of the inference engine.
    :param trace: Print DRSs and clauses for every sentence.
    :param lenient: Batch runs exit with 0 even when lines were rejected.
    :param report_dir: Directory of the batch CSV reports.
    :param script_io: File with scripted executor replies, one per line.
    """
    lexicon_path: str = Field("lexicons/atm_lexicon.txt", description="Lexicon file")
    schemata_path: str = Field("schemata/paraphrase_schemata.txt", description="Paraphrase schema file")
    kb_path: Optional[str] = Field(None, description="Knowledge base loaded at start-up")
    depth_bound: conint(ge=1) = 64
    trace: bool = False
    lenient: bool = False
    report_dir: str = Field("", description="Directory of batch reports")
    script_io: Optional[str] = Field(None, description="Scripted executor replies")

    @model_validator(mode="before")
    @classmethod
    def set_default_report_dir(cls, values):
        """
        If 'report_dir' is an empty string or not provided, use 'reports' in the current directory.
        """
        if isinstance(values, dict) and not values.get("report_dir"):
            values["report_dir"] = str(Path.cwd() / 'reports')
        return values

    @field_validator('lexicon_path', 'schemata_path')
    @classmethod
    def validate_not_blank(cls, v: str) -> str:
        if not v.strip():
            raise ValueError('path must not be blank')
        return v

    @classmethod
    def load_from_file(cls, path: str | Path = None) -> "DialogConfig":
        """
        Load configuration from a JSON file.
        Relative paths inside the file are resolved against the file's directory.

        :param path: Path to the JSON config file.
        :return: An instance of the DialogConfig class.
        :raises ConfigError: If the file is missing, not valid JSON or the data is invalid.
        """
        config_path = Path(path or Path.cwd().joinpath(DEFAULT_CONFIG_NAME))
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                data = json.load(f)
            config = cls(**data)
        except FileNotFoundError:
            raise ConfigError(f"Config file not found: {config_path}")
        except json.JSONDecodeError as e:
            raise ConfigError(f"Config file {config_path} is not valid JSON: {e}")
        except ValidationError as e:
            raise ConfigError(f"Invalid config {config_path}: {e}")
        return config._resolved_against(config_path.parent)

    def with_overrides(self, **overrides) -> "DialogConfig":
        """
        Copy of the config with the given fields replaced; None values keep the current field.

        :raises ConfigError: If an override does not validate.
        """
        values = self.model_dump()
        values.update({key: value for key, value in overrides.items() if value is not None})
        try:
            return DialogConfig(**values)
        except ValidationError as e:
            raise ConfigError(f"Invalid option: {e}")

    def _resolved_against(self, base: Path) -> "DialogConfig":
        values = self.model_dump()
        for key in ('lexicon_path', 'schemata_path', 'kb_path', 'report_dir', 'script_io'):
            if values[key] and not Path(values[key]).is_absolute():
                values[key] = str(base / values[key])
        return DialogConfig(**values)
