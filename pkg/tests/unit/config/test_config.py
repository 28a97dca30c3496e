# -*- coding: utf-8 -*-
import json
from pathlib import Path

import pytest

from spec_system.config import DialogConfig
from spec_system.exceptions import ConfigError


def write_config(path: Path, data) -> Path:
    path.write_text(data if isinstance(data, str) else json.dumps(data), encoding='utf-8')
    return path


class TestDialogConfig:

    def test_defaults(self):
        """Test the default settings"""
        config = DialogConfig()
        assert config.depth_bound == 64
        assert not config.trace
        assert config.kb_path is None
        assert config.report_dir == str(Path.cwd() / 'reports')

    def test_relative_paths_resolved_against_file(self, tmp_path):
        """Test that paths in a config file are taken relative to the file"""
        path = write_config(tmp_path / 'dialog_config.json', {
            "lexicon_path": "lexicons/atm_lexicon.txt",
            "kb_path": "atm.kb",
            "report_dir": "out",
            "depth_bound": 10
        })
        config = DialogConfig.load_from_file(path)
        assert config.lexicon_path == str(tmp_path / 'lexicons' / 'atm_lexicon.txt')
        assert config.kb_path == str(tmp_path / 'atm.kb')
        assert config.report_dir == str(tmp_path / 'out')
        assert config.depth_bound == 10
        assert config.script_io is None

    def test_absolute_paths_kept(self, tmp_path):
        """Test that absolute paths are left as they are"""
        lexicon = str(tmp_path / 'elsewhere' / 'lexicon.txt')
        config = DialogConfig.load_from_file(write_config(tmp_path / 'config.json', {"lexicon_path": lexicon}))
        assert config.lexicon_path == lexicon

    def test_with_overrides(self):
        """Test that command line options replace fields and None keeps them"""
        config = DialogConfig().with_overrides(depth_bound=5, trace=True, kb_path=None)
        assert config.depth_bound == 5
        assert config.trace
        assert config.kb_path is None

    def test_invalid_override(self):
        """Test that an invalid option is a config error"""
        with pytest.raises(ConfigError):
            DialogConfig().with_overrides(depth_bound=0)

    def test_missing_file(self, tmp_path):
        """Test the error for a config file that does not exist"""
        with pytest.raises(ConfigError) as error:
            DialogConfig.load_from_file(tmp_path / 'missing.json')
        assert 'not found' in str(error.value)

    @pytest.mark.parametrize('data', [
        '{"depth_bound": ',
        {"depth_bound": 0},
        {"lexicon_path": "  "},
        {"trace": "sometimes"},
    ])
    def test_invalid_files(self, tmp_path, data):
        """Test that malformed or invalid config files are config errors"""
        with pytest.raises(ConfigError):
            DialogConfig.load_from_file(write_config(tmp_path / 'config.json', data))
