"""
    vqbicmypy
    =========

    Mypy plugin describing the methods `vqbic.util.dataclass` generates,
    so slotted models type-check like standard dataclasses.

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

from mypy.plugin import Plugin
from mypy import nodes
from mypy import types
from mypy.plugins import common

DATACLASS = 'vqbic.util.dataclasses.dataclass'


def argument(name, type, kind=nodes.ARG_POS, initializer=None):
    return nodes.Argument(
        variable=nodes.Var(name, type),
        type_annotation=type,
        initializer=initializer,
        kind=kind,
    )


def model_fields(info):
    """Get the annotated, non-ClassVar variables of a model, in order."""

    names = [i for i in info.names.values() if isinstance(i.node, nodes.Var)]
    return [i for i in names if i.type is not None and not i.node.is_classvar]


def add_dataclass_hook(ctx):
    """Add the generated initializer and helpers to the class context."""

    api = ctx.api
    info = ctx.cls.info
    any_type = types.AnyType(types.TypeOfAny.special_form)
    bool_type = api.builtin_type('builtins.bool')
    recurse = argument('recurse', bool_type, nodes.ARG_NAMED_OPT, nodes.NameExpr('True'))

    # Decorator defaults make every argument optional to the checker.
    has_defaults = bool(getattr(ctx.reason, 'args', None))
    if '__init__' not in info.names:
        kind = nodes.ARG_OPT if has_defaults else nodes.ARG_POS
        args = [argument(i.node.name, i.type, kind) for i in model_fields(info)]
        common.add_method(ctx, '__init__', args, types.NoneType())

    common.add_method(ctx, 'asdict', [recurse], api.builtin_type('builtins.dict'))
    common.add_method(ctx, 'astuple', [recurse], api.builtin_type('builtins.tuple'))
    common.add_method(ctx, 'fields', [], api.builtin_type('builtins.tuple'))
    common.add_method(
        ctx,
        'replace',
        [argument('changes', any_type, nodes.ARG_STAR2)],
        types.Instance(info, []),
    )
    common.add_method(
        ctx,
        '_set',
        [argument('name', api.builtin_type('builtins.str')), argument('value', any_type)],
        types.NoneType(),
    )


class VqbicPlugin(Plugin):
    """Plugin to support the generated vqbic model classes."""

    def get_class_decorator_hook(self, fullname: str):
        if fullname == DATACLASS:
            return add_dataclass_hook
        return None


def plugin(version: str) -> 'Plugin':
    """Get the application plugin."""

    return VqbicPlugin
