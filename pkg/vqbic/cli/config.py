"""
    config
    ======

    Loading the flat `key = value` run configuration and merging
    command-line overrides into it.

    The file has no sections: its lines are read under an implicit
    `[run]` section, `#` starts a comment and every key must belong to
    the `RunConfig` schema.

    License
    -------

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
"""

from __future__ import annotations
import argparse
import configparser
import os
import typing

from .. import errors
from .. import models

__all__ = [
    'flag_overrides',
    'load_config',
    'parse_config',
    'resolve_config',
]

SECTION = 'run'

# Command-line flag (argparse dest) to configuration key.
FLAG_KEYS = {
    'seed': 'seed',
    'mode': 'mode',
    'n_best': 'n_best',
    'lambda_': 'lambda',
    'threads': 'threads',
}


def parse_config(text: str) -> models.RunConfig:
    """
    Parse configuration text.

    :raises ConfigError: Malformed line, section header, duplicate or unknown key.
    """

    parser = configparser.ConfigParser(
        delimiters=('=',),
        comment_prefixes=('#',),
        inline_comment_prefixes=('#',),
        interpolation=None,
        default_section='\x00',
    )
    parser.optionxform = str  # type: ignore
    try:
        parser.read_string(f'[{SECTION}]\n{text}')
    except configparser.Error as error:
        raise errors.ConfigError(f'Malformed configuration: {error.message}')

    extra = [i for i in parser.sections() if i != SECTION]
    if extra:
        raise errors.ConfigError(f'Sections are not supported, found [{extra[0]}].')
    data = {k.strip(): v.strip() for k, v in parser.items(SECTION)}
    return models.RunConfig.create_from_record(data)


def load_config(path: typing.Optional[str]) -> models.RunConfig:
    """Load a configuration file, or the defaults without one."""

    if path is None:
        return models.RunConfig()
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as error:
        raise errors.IoError(f'Cannot read configuration ({error.strerror})', os.fspath(path))
    except UnicodeDecodeError:
        raise errors.ConfigError(f'Configuration is not UTF-8: {path}')
    return parse_config(text)


def flag_overrides(args: argparse.Namespace) -> typing.Dict[str, typing.Any]:
    """Collect the configuration keys set on the command line."""

    data: typing.Dict[str, typing.Any] = {}
    for dest, key in FLAG_KEYS.items():
        value = getattr(args, dest, None)
        if value is not None:
            data[key] = value
    for item in getattr(args, 'set', None) or ():
        key, sep, value = item.partition('=')
        if not sep:
            raise errors.ConfigError(f'Expected KEY=VALUE, got {item!r}.')
        data[key.strip()] = value.strip()
    return data


def resolve_config(args: argparse.Namespace) -> models.RunConfig:
    """Load the configuration file and apply the command-line overrides."""

    config = load_config(getattr(args, 'config', None))
    overrides = flag_overrides(args)
    if overrides:
        config = config.update(overrides)
    return config
