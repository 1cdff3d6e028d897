import configparser, ast
from pathlib import Path

from typing import Any

SETTINGS_FILES = [Path(__file__).resolve().parent.parent / 'settings.ini', Path('settings.ini')]

def tryeval(text: str) -> Any:
    """ A python literal when the text is one, else the text itself. """
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text

def _read() -> dict[str, Any]:
    config = configparser.ConfigParser()
    config.read(SETTINGS_FILES)
    settings: dict[str, Any] = {}
    for section in config.sections():
        for key in config[section]:
            settings[key] = tryeval(config[section][key])
    return settings

SETTINGS: dict[str, Any] = _read()

def refresh_settings() -> None:
    SETTINGS.clear()
    SETTINGS.update(_read())

def setting(key: str, default: Any = None) -> Any:
    """ Return a setting, falling back to `default` when the ini file does not define it. """
    return SETTINGS.get(key, default)
