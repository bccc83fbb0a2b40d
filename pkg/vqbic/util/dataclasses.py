"""
    dataclasses
    ===========

    Wrappers around Python's dataclasses to support slots, defaults
    passed to the decorator, and numpy array fields.

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
import copy
import dataclasses
import inspect
import typing

import numpy as np

__all__ = [
    'Field',
    'FrozenInstanceError',
    'MISSING',
    'dataclass',
    'freeze_array',
    'is_dataclass',
    'values_equal',
]

Field = dataclasses.Field
FrozenInstanceError = dataclasses.FrozenInstanceError
MISSING = dataclasses.MISSING
is_dataclass = dataclasses.is_dataclass
Vars = typing.Dict[str, typing.Any]

# HELPERS


def freeze_array(value: typing.Any, dtype: typing.Any = None) -> np.ndarray:
    """Copy a value into a read-only, C-contiguous numpy array."""

    array = np.array(value, dtype=dtype, copy=True, order='C')
    array.flags.writeable = False
    return array


def values_equal(x: typing.Any, y: typing.Any) -> bool:
    """Compare two field values, treating numpy arrays by exact content."""

    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        if not (isinstance(x, np.ndarray) and isinstance(y, np.ndarray)):
            return False
        return (
            x.dtype == y.dtype
            and x.shape == y.shape
            and bool(np.array_equal(x, y))
        )
    if isinstance(x, (tuple, list)) and isinstance(y, (tuple, list)):
        return (
            type(x) is type(y)
            and len(x) == len(y)
            and all(values_equal(i, j) for i, j in zip(x, y))
        )
    return bool(x == y)


def init_argnames(cls: typing.Type) -> typing.Sequence[str]:
    """Get the positional argument names of the class initializer."""

    # `co_varnames` lists arguments first, so slice by `co_argcount`
    # and drop `self`.
    code = cls.__init__.__code__
    return code.co_varnames[1:code.co_argcount]


def set_defaults(cls: typing.Type, defaults: Vars) -> None:
    """Set and validate optional default arguments on the initializer."""

    if not defaults:
        return

    varnames = init_argnames(cls)
    count = len(defaults)
    if list(varnames[-count:]) != list(defaults):
        raise SyntaxError("non-default argument follows default argument")
    if cls.__init__.__defaults__ is not None:
        raise SyntaxError("__defaults__ should be none.")

    cls.__init__.__defaults__ = tuple(defaults.values())


def is_classvar(annotation: typing.Any, global_vars: Vars, local_vars: Vars) -> bool:
    """Determine if an annotation is a ClassVar."""

    if isinstance(annotation, str):
        if 'ClassVar' not in annotation:
            return False
        # Only internal type annotations are evaluated.
        annotation = eval(annotation, global_vars, local_vars)  # nosec
    return getattr(annotation, '__origin__', None) is typing.ClassVar


# GENERATED METHODS


def replace_dict(self) -> Vars:
    # Fields missing from a custom initializer are derived values,
    # so they are left for the initializer to recompute.
    return {k: getattr(self, k) for k in init_argnames(type(self))}


def make_eq(cls: typing.Type):
    def __eq__(self, other):
        if other.__class__ is not self.__class__:
            return NotImplemented
        names = [i.name for i in dataclasses.fields(self) if i.compare]
        return all(values_equal(getattr(self, i), getattr(other, i)) for i in names)
    return __eq__


def make_methods(cls: typing.Type) -> Vars:
    """Create the helper methods bound onto every model class."""

    def __copy__(self):
        return type(self)(**replace_dict(self))

    def __deepcopy__(self, memo=None):
        return type(self)(**copy.deepcopy(replace_dict(self), memo))

    def asdict(self, recurse: bool = True) -> Vars:
        if recurse:
            return dataclasses.asdict(self)
        return {i.name: getattr(self, i.name) for i in dataclasses.fields(self)}

    def astuple(self, recurse: bool = True) -> tuple:
        if recurse:
            return dataclasses.astuple(self)
        return tuple(getattr(self, i.name) for i in dataclasses.fields(self))

    def fields(self) -> tuple:
        return dataclasses.fields(self)

    def replace(self, **changes):
        data = replace_dict(self)
        data.update(changes)
        return type(self)(**data)

    methods = {
        '__copy__': __copy__,
        '__deepcopy__': __deepcopy__,
        'asdict': asdict,
        'astuple': astuple,
        'fields': fields,
        'replace': replace,
    }
    for name, func in methods.items():
        func.__name__ = name
        func.__qualname__ = f'{cls.__qualname__}.{name}'
        func.__module__ = cls.__module__
    return methods


def wrap_class(cls: typing.Type, global_vars: Vars, local_vars: Vars) -> typing.Type:
    """Rebuild the class with slots and the generated helpers."""

    clsdict = dict(cls.__dict__)
    clsdict.pop('__dict__', None)
    clsdict.pop('__weakref__', None)
    annotations = clsdict.setdefault('__annotations__', {})
    if '__slots__' not in clsdict:
        clsdict['__slots__'] = tuple(
            k for k, v in annotations.items()
            if not is_classvar(v, global_vars, local_vars)
        )
    for name, func in make_methods(cls).items():
        clsdict.setdefault(name, func)
    clsdict['_set'] = object.__setattr__

    return type(cls)(cls.__name__, cls.__bases__, clsdict)


def update_closure(cls: typing.Type, new_cls: typing.Type) -> None:
    """
    Point any `super()/__class__` closures at the rebuilt class.

    Methods using zero-argument `super()` hold the original class in a
    `__class__` cell, which must be swapped for the rebuilt one.
    """

    for _, func in inspect.getmembers(new_cls, inspect.isroutine):
        func = getattr(func, '__func__', func)
        code = getattr(func, '__code__', None)
        closure = getattr(func, '__closure__', None)
        if code is None or not closure or '__class__' not in code.co_freevars:
            continue
        for cell in closure:
            if cell.cell_contents is cls:
                cell.cell_contents = new_cls


# DATACLASS


def dataclass(
    cls: typing.Optional[typing.Type] = None,
    *,
    init: bool = True,
    repr: bool = True,
    frozen: bool = False,
    **defaults: typing.Any
):
    """
    Generate a slotted dataclass with optional default arguments.

    Equality is generated here rather than by `dataclasses`, so that numpy
    array fields compare by content instead of raising on truth testing.
    """

    frame = inspect.stack()[1].frame
    global_vars = frame.f_globals
    local_vars = frame.f_locals

    def wrap(cls: typing.Type) -> typing.Type:
        base = wrap_class(cls, global_vars, local_vars)
        new_cls = dataclasses.dataclass(init=init, repr=repr, eq=False, frozen=frozen)(base)
        if '__eq__' not in cls.__dict__:
            new_cls.__eq__ = make_eq(new_cls)
            new_cls.__hash__ = None
        set_defaults(new_cls, defaults)
        update_closure(cls, new_cls)
        return new_cls

    if cls is None:
        return wrap
    return wrap(cls)
