# -*- coding: utf-8 -*-
"""
Specification dialog - controlled natural language specifications compiled into
a Horn clause knowledge base that can be queried, paraphrased and executed.

This module provides invoke tasks for the interactive dialog, batch runs over
specification files and listings of the lexicon and the knowledge base.
"""
from os import getcwd
from os.path import isfile, join
from typing import Optional

from invoke import Exit, task
from rich import print
from rich.markup import escape
from rich.table import Table

from spec_system.config import DEFAULT_CONFIG_NAME, DialogConfig
from spec_system.console import MyConsole, setup_logging
from spec_system.dialog import LexiconEditor, Repl, Session, choose_reading, run_batch
from spec_system.exceptions import ConfigError, KbFormatError, LexiconFormatError, SchemaFormatError
from spec_system.executor import ConsoleIo, ScriptedIo
from spec_system.knowledge_base import load_kb
from spec_system.lexicon import format_entry_line, load_lexicon
from spec_system.paraphraser import load_schemata, paraphrase_kb

_FORMAT_ERRORS = (ConfigError, LexiconFormatError, KbFormatError, SchemaFormatError, FileNotFoundError)


def _load_config(config: Optional[str], **overrides) -> DialogConfig:
    path = config or join(getcwd(), DEFAULT_CONFIG_NAME)
    try:
        base = DialogConfig.load_from_file(path) if config or isfile(path) else DialogConfig()
        return base.with_overrides(**overrides)
    except ConfigError as e:
        print(f"[red]|ERROR| {escape(str(e))}")
        raise Exit(code=2)


@task
def dialog(
        c,
        batch: Optional[str] = None,
        lexicon: Optional[str] = None,
        kb: Optional[str] = None,
        script_io: Optional[str] = None,
        depth: Optional[int] = None,
        trace: bool = False,
        lenient: bool = False,
        config: Optional[str] = None,
):
    """
    Start the specification dialog, or run a file of sentences with --batch.

    :param c: Context (invoke requirement)
    :param batch: File with one sentence, question or command per line
    :param lexicon: Lexicon file (overrides the config)
    :param kb: Knowledge base file loaded at start-up
    :param script_io: File with executor replies, one per line
    :param depth: Inference depth bound
    :param trace: Print syntax trees, DRSs and clauses of every sentence
    :param lenient: Exit with 0 even when batch lines were rejected
    :param config: Path to the dialog config (default: ./dialog_config.json)
    """
    settings = _load_config(
        config,
        lexicon_path=lexicon,
        kb_path=kb,
        script_io=script_io,
        depth_bound=depth,
        trace=trace or None,
        lenient=lenient or None
    )
    setup_logging(settings.trace)

    try:
        if batch:
            session = Session.from_config(settings, io=None if settings.script_io else ScriptedIo())
        else:
            io = ConsoleIo()
            session = Session.from_config(settings, io=None if settings.script_io else io,
                                          choose=choose_reading, edit_word=LexiconEditor(io))
    except _FORMAT_ERRORS as e:
        print(f"[red]|ERROR| {escape(str(e))}")
        raise Exit(code=2)

    if settings.kb_path:
        print(f"[cyan]|INFO| Knowledge base: {settings.kb_path} ({len(session.kb)} clauses)")

    if not batch:
        return Repl(session).run()

    try:
        _, exit_code = run_batch(session, batch, settings.report_dir, lenient=settings.lenient)
    except FileNotFoundError as e:
        print(f"[red]|ERROR| {escape(str(e))}")
        raise Exit(code=2)
    if exit_code:
        raise Exit(code=exit_code)


@task
def kb_list(c, kb: str, pred: Optional[str] = None):
    """
    List the clauses of a knowledge base file.

    :param c: Context (invoke requirement)
    :param kb: Knowledge base file
    :param pred: Only clauses whose head is this predicate
    """
    try:
        knowledge_base = load_kb(kb)
    except _FORMAT_ERRORS as e:
        print(f"[red]|ERROR| {escape(str(e))}")
        raise Exit(code=2)

    table = Table(title=f"{kb} ({len(knowledge_base)} clauses)")
    for column in ('#', 'clause', 'source'):
        table.add_column(column)
    for number, item in enumerate(knowledge_base.list_clauses(pred), start=1):
        table.add_row(str(number), escape(str(item.clause)), escape(item.source))
    MyConsole().print(table)


@task
def lexicon_list(c, lexicon: Optional[str] = None, category: Optional[str] = None, config: Optional[str] = None):
    """
    List lexicon entries.

    :param c: Context (invoke requirement)
    :param lexicon: Lexicon file (default: from the config)
    :param category: Only entries of this category
    :param config: Path to the dialog config
    """
    settings = _load_config(config, lexicon_path=lexicon)
    try:
        entries = load_lexicon(settings.lexicon_path).entries
    except _FORMAT_ERRORS as e:
        print(f"[red]|ERROR| {escape(str(e))}")
        raise Exit(code=2)

    for entry in entries:
        if category is None or entry.category == category:
            print(escape(format_entry_line(entry)))


@task
def paraphrase(c, kb: str, lexicon: Optional[str] = None, schemata: Optional[str] = None, config: Optional[str] = None):
    """
    Paraphrase a knowledge base file in controlled English.

    :param c: Context (invoke requirement)
    :param kb: Knowledge base file
    :param lexicon: Lexicon file (default: from the config)
    :param schemata: Paraphrase schema file (default: from the config)
    :param config: Path to the dialog config
    """
    settings = _load_config(config, lexicon_path=lexicon, schemata_path=schemata)
    try:
        result = paraphrase_kb(
            load_kb(kb).clauses,
            load_schemata(settings.schemata_path),
            load_lexicon(settings.lexicon_path)
        )
    except _FORMAT_ERRORS as e:
        print(f"[red]|ERROR| {escape(str(e))}")
        raise Exit(code=2)

    for line in result.lines():
        print(f"[green]{escape(line)}")
